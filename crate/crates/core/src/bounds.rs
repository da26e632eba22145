//! Genus bounds in terms of quadrilateral counts, and size bounds.

use num_bigint::BigUint;
use serde::Serialize;

use crate::classify::ClassificationFlags;
use crate::error::{Error, Result};
use crate::surface::{RegionDecomposition, TopologySummary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// lhs ≤ rhs
    Le,
    /// lhs < rhs
    Lt,
    /// lhs = rhs
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub name: String,
    pub statement: String,
    pub relation: Relation,
    pub applicable: bool,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub sharp: bool,
}

impl BoundRecord {
    pub fn new(name: &str, statement: &str, relation: Relation, applicable: bool, lhs: i64, rhs: i64) -> Self {
        let holds = match relation {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Eq => lhs == rhs,
        };
        BoundRecord {
            name: name.into(),
            statement: statement.into(),
            relation,
            applicable,
            lhs,
            rhs,
            holds: holds || !applicable,
            sharp: applicable && lhs == rhs,
        }
    }

    /// Applicable and violated.
    pub fn violated(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// The surface is (the connected part of) a Haken sum: with `m` vertex
/// linking spheres added it equals a sum of `n` closed connected
/// orientable normal surfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HakenData {
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundOptions {
    pub haken: Option<HakenData>,
    /// Caller asserts the triangulation is minimal and the manifold prime.
    pub assert_minimal: bool,
    /// Caller asserts M = F×I with g(F) given, and that S separates the
    /// two boundary components.
    pub product_fibre_genus: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub records: Vec<BoundRecord>,
    /// 2g > q for a closed connected orientable surface: it compresses.
    pub compressibility_certificate: bool,
    /// Upper bound on the Thurston norm of the class of S.
    pub thurston_norm_bound: Option<i64>,
    /// The weaker 2g ≤ 7q, for comparison only.
    pub coarse: BoundRecord,
}

impl BoundReport {
    pub fn record(&self, name: &str) -> Option<&BoundRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn violations(&self) -> Vec<&BoundRecord> {
        self.records.iter().filter(|r| r.violated()).collect()
    }
}

pub fn bound_report(
    flags: &ClassificationFlags,
    s: &TopologySummary,
    regions: Option<&RegionDecomposition>,
    opts: &BoundOptions,
) -> Result<BoundReport> {
    if let Some(r) = regions {
        let tri: usize = r.triangle.iter().map(|x| x.discs.len()).sum();
        let quad: usize = r.quad.iter().map(|x| x.discs.len()).sum();
        if (tri, quad) != (s.triangles, s.q) {
            return Err(Error::InvalidInput(format!(
                "regions cover {tri} triangles and {quad} quads, surface has {} and {}",
                s.triangles, s.q
            )));
        }
    }
    let (g, q, chi, b, v) = (s.genus, s.q as i64, s.chi, s.b as i64, s.v as i64);
    let m_orientable = flags.orientable;
    let connected = s.connected();
    let closed_orientable = m_orientable && connected && s.closed() && s.orientable;
    let mut records = Vec::new();

    records.push(BoundRecord::new(
        "quad-surface-identity",
        "q = 2g + v - 2 for closed orientable all-quadrilateral surfaces",
        Relation::Eq,
        closed_orientable && s.triangles == 0 && q > 0,
        q,
        2 * g + v - 2,
    ));
    records.push(BoundRecord::new(
        "closed-orientable",
        "2g <= 3q",
        Relation::Le,
        closed_orientable,
        2 * g,
        3 * q,
    ));
    records.push(BoundRecord::new(
        "closed-non-orientable",
        "g <= 3q + 1",
        Relation::Le,
        m_orientable && connected && s.closed() && !s.orientable,
        g,
        3 * q + 1,
    ));
    records.push(BoundRecord::new(
        "bounded",
        "2 - chi <= 3q + 1 (equivalently 2g + b <= 3q + 1)",
        Relation::Le,
        m_orientable && connected && s.orientable && b > 0,
        2 - chi,
        3 * q + 1,
    ));
    let haken = opts.haken.filter(|_| closed_orientable);
    let (n, m) = haken.map_or((0, 0), |h| (h.n as i64, h.m as i64));
    records.push(BoundRecord::new(
        "haken-sum",
        "2g <= 3q + 2(1 - n + m)",
        Relation::Le,
        haken.is_some(),
        2 * g,
        3 * q + 2 * (1 - n + m),
    ));
    let fibre = opts.product_fibre_genus.filter(|_| closed_orientable);
    records.push(BoundRecord::new(
        "product-splitting",
        "2g(F) <= q for a surface separating the ends of F x I",
        Relation::Le,
        fibre.is_some(),
        2 * fibre.unwrap_or(0),
        q,
    ));
    // with chains of at least n edges: 2g <= (1 + 4/n) q, scaled by n
    let chain = regions.map(|r| r.min_chain_length);
    let (lhs, rhs) = match chain {
        Some(Some(n)) => (2 * g * n as i64, (n as i64 + 4) * q),
        _ => (2 * g, q),
    };
    records.push(BoundRecord::new(
        "quad-chain",
        "2g <= (1 + 4/n) q with n the shortest chain (both sides times n when finite)",
        Relation::Le,
        closed_orientable && chain.is_some(),
        lhs,
        rhs,
    ));
    records.push(BoundRecord::new(
        "simplicial",
        "6g <= 7q",
        Relation::Le,
        closed_orientable && flags.simplicial,
        6 * g,
        7 * q,
    ));
    records.push(BoundRecord::new(
        "minimal-prime",
        "6g <= 7q",
        Relation::Le,
        closed_orientable && opts.assert_minimal,
        6 * g,
        7 * q,
    ));
    Ok(BoundReport {
        records,
        compressibility_certificate: closed_orientable && 2 * g > q,
        thurston_norm_bound: (m_orientable && s.closed() && s.orientable).then_some(q),
        coarse: BoundRecord::new("coarse", "2g <= 7q", Relation::Le, closed_orientable, 2 * g, 7 * q),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexityBounds {
    /// 2 Σ (2g(F) - 1) over boundary components.
    pub boundary_lower_bound: i64,
    pub tetrahedra: usize,
    /// ⌊(6n² + 3) √6ⁿ⌋: genus of a closed orientable vertex normal surface.
    pub genus_cap_normal: String,
    /// ⌊(2n² + 1) √6ⁿ⌋: genus of an incompressible one.
    pub genus_cap_incompressible: String,
}

/// ⌊a · √6ⁿ⌋ = ⌊√(a² 6ⁿ)⌋, computed exactly.
pub fn floor_times_sqrt6_pow(a: u64, n: u32) -> BigUint {
    let a = BigUint::from(a);
    (&a * &a * BigUint::from(6u32).pow(n)).sqrt()
}

/// Genus caps for a triangulation with `n` tetrahedra (or complexity `n`).
pub fn genus_caps(n: usize) -> (BigUint, BigUint) {
    let n2 = (n * n) as u64;
    (
        floor_times_sqrt6_pow(6 * n2 + 3, n as u32),
        floor_times_sqrt6_pow(2 * n2 + 1, n as u32),
    )
}

pub fn complexity_bounds(flags: &ClassificationFlags) -> ComplexityBounds {
    let boundary_lower_bound = flags
        .boundary_components
        .iter()
        .map(|c| 2 * (2 * c.genus - 1))
        .sum();
    let (normal, incompressible) = genus_caps(flags.tetrahedra);
    ComplexityBounds {
        boundary_lower_bound,
        tetrahedra: flags.tetrahedra,
        genus_cap_normal: normal.to_string(),
        genus_cap_incompressible: incompressible.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_for_one_tetrahedron() {
        let (a, b) = genus_caps(1);
        assert_eq!(a, BigUint::from(22u32));
        assert_eq!(b, BigUint::from(7u32));
        let (a, _) = genus_caps(2);
        assert_eq!(a, BigUint::from(27u32 * 6));
    }

    #[test]
    fn records_respect_relation() {
        let r = BoundRecord::new("x", "", Relation::Le, true, 6, 6);
        assert!(r.holds && r.sharp);
        let r = BoundRecord::new("x", "", Relation::Lt, true, 6, 6);
        assert!(!r.holds && r.violated());
        let r = BoundRecord::new("x", "", Relation::Le, false, 7, 6);
        assert!(!r.violated() && !r.sharp);
    }
}
