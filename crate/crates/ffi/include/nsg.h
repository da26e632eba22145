#ifndef NSG_H
#define NSG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NsgCoordinates {
  NSG_COORDINATES_STANDARD = 0,
  NSG_COORDINATES_QUAD = 1,
} NsgCoordinates;

typedef enum NsgStatus {
  NSG_STATUS_OK = 0,
  NSG_STATUS_NULL_ARGUMENT = 1,
  NSG_STATUS_INVALID_UTF8 = 2,
  NSG_STATUS_PARSE_ERROR = 3,
  NSG_STATUS_PRECONDITION_FAILED = 4,
  NSG_STATUS_OUT_OF_RANGE = 5,
  NSG_STATUS_INTERNAL = 6,
} NsgStatus;

/**
 * A normal surface in standard coordinates with its rebuilt topology.
 */
typedef struct NsgSurface NsgSurface;

typedef struct NsgSurfaceList NsgSurfaceList;

/**
 * A parsed triangulation with its skeleton.
 */
typedef struct NsgTriangulation NsgTriangulation;

typedef struct NsgSummary {
  int64_t euler_characteristic;
  int64_t genus;
  bool orientable;
  bool connected;
  size_t boundary_components;
  size_t quads;
  size_t triangles;
  /**
   * Surface vertices, counted in the normal cell structure.
   */
  size_t vertices;
} NsgSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next failing call on the thread.
 */
const char *nsg_last_error(void);

/**
 * Parses the gluing table text format.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum NsgStatus nsg_triangulation_parse(const char *text, struct NsgTriangulation **out);

/**
 * Builds a member of a family: "an", "bg", "gale", "fxi" take `param`,
 * "s2xi" ignores it.
 *
 * # Safety
 * `family` must be a nul-terminated string and `out` a valid pointer.
 */
enum NsgStatus nsg_generate(const char *family, size_t param, struct NsgTriangulation **out);

/**
 * # Safety
 * `tri` must come from this library and not be used afterwards. Null is ignored.
 */
void nsg_triangulation_free(struct NsgTriangulation *tri);

/**
 * # Safety
 * Pointers must be valid.
 */
enum NsgStatus nsg_triangulation_size(const struct NsgTriangulation *tri, size_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum NsgStatus nsg_triangulation_vertices(const struct NsgTriangulation *tri, size_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum NsgStatus nsg_triangulation_is_orientable(const struct NsgTriangulation *tri, bool *out);

/**
 * Rank of the first homology group.
 *
 * # Safety
 * Pointers must be valid.
 */
enum NsgStatus nsg_triangulation_h1_rank(const struct NsgTriangulation *tri, size_t *out);

/**
 * Serialized gluing table, released with [`nsg_string_free`].
 *
 * # Safety
 * Pointers must be valid.
 */
enum NsgStatus nsg_triangulation_to_text(const struct NsgTriangulation *tri, char **out);

/**
 * Parses a coordinate file against `tri`; quad vectors are lifted.
 *
 * # Safety
 * `text` must be a nul-terminated string and the other pointers valid.
 */
enum NsgStatus nsg_surface_parse(const struct NsgTriangulation *tri,
                                 const char *text,
                                 struct NsgSurface **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. Null is ignored.
 */
void nsg_surface_free(struct NsgSurface *s);

/**
 * # Safety
 * Pointers must be valid.
 */
enum NsgStatus nsg_surface_summary(const struct NsgSurface *s, struct NsgSummary *out);

/**
 * Standard coordinates in the text format, released with [`nsg_string_free`].
 *
 * # Safety
 * Pointers must be valid.
 */
enum NsgStatus nsg_surface_to_text(const struct NsgSurface *s, char **out);

/**
 * Admissible vertex normal surfaces; quad solutions are lifted.
 *
 * # Safety
 * Pointers must be valid.
 */
enum NsgStatus nsg_enumerate(const struct NsgTriangulation *tri,
                             enum NsgCoordinates coords,
                             struct NsgSurfaceList **out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum NsgStatus nsg_surface_list_len(const struct NsgSurfaceList *list, size_t *out);

/**
 * Copies entry `i` into a new surface handle.
 *
 * # Safety
 * Pointers must be valid.
 */
enum NsgStatus nsg_surface_list_get(const struct NsgSurfaceList *list,
                                    size_t i,
                                    struct NsgSurface **out);

/**
 * # Safety
 * `list` must come from this library and not be used afterwards. Null is ignored.
 */
void nsg_surface_list_free(struct NsgSurfaceList *list);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. Null is ignored.
 */
void nsg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NSG_H */
