//! Combinatorial ideal triangulations of punctured surfaces.

use std::collections::BTreeMap;
use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Deserialize, Serialize)]
struct RawTriangulation {
    edges: usize,
    triangles: Vec<[usize; 3]>,
    fans: IndexMap<String, Vec<usize>>,
}

/// Edges, triangles (as edge triples), and for every puncture the cyclic
/// sequence of edge ends met going counterclockwise around it.
#[derive(Clone, PartialEq, Eq)]
pub struct Triangulation {
    edges: usize,
    triangles: Vec<[usize; 3]>,
    fans: IndexMap<String, Vec<usize>>,
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Triangulation")
            .field("edges", &self.edges)
            .field("triangles", &self.triangles)
            .field("fans", &self.fans)
            .finish()
    }
}

fn unordered(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

impl Triangulation {
    pub fn new(edges: usize, triangles: Vec<[usize; 3]>, fans: IndexMap<String, Vec<usize>>) -> Result<Self> {
        let t = Triangulation { edges, triangles, fans };
        t.validate()?;
        Ok(t)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawTriangulation = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(raw.edges, raw.triangles, raw.fans)
    }

    pub fn to_json(&self) -> String {
        let raw = RawTriangulation {
            edges: self.edges,
            triangles: self.triangles.clone(),
            fans: self.fans.clone(),
        };
        serde_json::to_string(&raw).expect("triangulation serializes")
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedTriangulation(msg));
        if self.edges == 0 {
            return bad("no edges".into());
        }
        if self.fans.is_empty() {
            return bad("no punctures".into());
        }
        let mut tri_ends = vec![0usize; self.edges];
        for tri in &self.triangles {
            for &e in tri {
                if e >= self.edges {
                    return bad(format!("triangle edge {e} out of range"));
                }
                tri_ends[e] += 1;
            }
        }
        if let Some(e) = tri_ends.iter().position(|&c| c != 2) {
            return bad(format!("edge {e} borders {} triangle sides, expected 2", tri_ends[e]));
        }
        let mut fan_ends = vec![0usize; self.edges];
        for (name, fan) in &self.fans {
            if fan.is_empty() {
                return bad(format!("puncture {name} has an empty fan"));
            }
            for &e in fan {
                if e >= self.edges {
                    return bad(format!("fan {name} edge {e} out of range"));
                }
                fan_ends[e] += 1;
            }
        }
        if let Some(e) = fan_ends.iter().position(|&c| c != 2) {
            return bad(format!("edge {e} has {} ends in the fans, expected 2", fan_ends[e]));
        }
        // Every corner of a triangle appears exactly once as a consecutive pair in some fan.
        let mut corners: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for tri in &self.triangles {
            for s in 0..3 {
                *corners.entry(unordered(tri[s], tri[(s + 1) % 3])).or_default() += 1;
            }
        }
        for fan in self.fans.values() {
            for s in 0..fan.len() {
                *corners.entry(unordered(fan[s], fan[(s + 1) % fan.len()])).or_default() -= 1;
            }
        }
        if let Some(((i, j), _)) = corners.iter().find(|(_, c)| **c != 0) {
            return bad(format!("corner between edges {i} and {j} does not match the fans"));
        }
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn puncture_count(&self) -> usize {
        self.fans.len()
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn fans(&self) -> &IndexMap<String, Vec<usize>> {
        &self.fans
    }

    pub fn puncture_names(&self) -> impl Iterator<Item = &str> {
        self.fans.keys().map(|s| s.as_str())
    }

    pub fn fan(&self, puncture: &str) -> Result<&[usize]> {
        self.fans
            .get(puncture)
            .map(|v| v.as_slice())
            .ok_or_else(|| Error::UnknownPuncture(puncture.to_string()))
    }

    /// Check `n = 6g + 3p - 6` against a claimed genus.
    pub fn matches_topology(&self, genus: usize) -> bool {
        6 * genus + 3 * self.puncture_count() == self.edges + 6
    }

    /// Genus recovered from the edge and puncture counts, when consistent.
    pub fn genus(&self) -> Option<usize> {
        let total = self.edges + 6;
        let p3 = 3 * self.puncture_count();
        (total >= p3 && (total - p3).is_multiple_of(6)).then(|| (total - p3) / 6)
    }

    /// Two triangles glued along three edges; a single puncture.
    pub fn once_punctured_torus() -> Self {
        let fans = IndexMap::from([("v0".to_string(), vec![0, 1, 2, 0, 1, 2])]);
        Self::new(3, vec![[0, 1, 2], [0, 1, 2]], fans).expect("fixture is valid")
    }

    /// Boundary of a tetrahedron with its vertices removed.
    ///
    /// Edges are `01, 02, 03, 12, 13, 23` in that order.
    pub fn four_punctured_sphere() -> Self {
        let fans = IndexMap::from([
            ("v0".to_string(), vec![1, 0, 2]),
            ("v1".to_string(), vec![0, 3, 4]),
            ("v2".to_string(), vec![3, 1, 5]),
            ("v3".to_string(), vec![2, 4, 5]),
        ]);
        Self::new(6, vec![[1, 3, 0], [0, 4, 2], [2, 5, 1], [3, 5, 4]], fans).expect("fixture is valid")
    }
}

/// The antisymmetric face matrix `sigma = b - b^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeMatrix {
    sigma: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        ExchangeMatrix { sigma: rows }
    }

    pub fn size(&self) -> usize {
        self.sigma.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.sigma[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.sigma
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.sigma[i][j] == -self.sigma[j][i]))
    }

    pub fn entries_in_range(&self) -> bool {
        self.sigma.iter().flatten().all(|x| (-2..=2).contains(x))
    }

    /// `a^T sigma b`.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| a[i] * self.sigma[i][j] * b[j]).sum::<i64>())
            .sum()
    }
}

/// `b_ij` counts cyclically consecutive pairs `(e_i, e_j)` over all fans.
pub fn sigma_from_fans(t: &Triangulation) -> ExchangeMatrix {
    let n = t.edge_count();
    let mut b = vec![vec![0i64; n]; n];
    for fan in t.fans().values() {
        for s in 0..fan.len() {
            b[fan[s]][fan[(s + 1) % fan.len()]] += 1;
        }
    }
    let sigma = (0..n).map(|i| (0..n).map(|j| b[i][j] - b[j][i]).collect()).collect();
    ExchangeMatrix { sigma }
}

/// Every triangle's three edge exponents (with multiplicity) sum to an even number.
pub fn balanced_check(k: &[i64], t: &Triangulation) -> bool {
    k.len() == t.edge_count() && t.triangles().iter().all(|tri| tri.iter().map(|&e| k[e]).sum::<i64>() % 2 == 0)
}

/// Exponent vector of `H_v`: how many ends of each edge sit at `v`.
pub fn puncture_exponent(t: &Triangulation, puncture: &str) -> Result<Vec<i64>> {
    let mut k = vec![0i64; t.edge_count()];
    for &e in t.fan(puncture)? {
        k[e] += 1;
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_sigma() {
        let t = Triangulation::once_punctured_torus();
        let s = sigma_from_fans(&t);
        assert!(s.is_antisymmetric());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(s.get(i, j).abs(), if i == j { 0 } else { 2 });
            }
        }
        assert_eq!(t.genus(), Some(1));
    }

    #[test]
    fn sphere_fixture() {
        let t = Triangulation::four_punctured_sphere();
        let s = sigma_from_fans(&t);
        assert!(s.is_antisymmetric() && s.entries_in_range());
        assert_eq!(t.genus(), Some(0));
        assert!(t.matches_topology(0));
    }

    #[test]
    fn balanced_examples() {
        let t = Triangulation::once_punctured_torus();
        assert!(balanced_check(&[0, 0, 0], &t));
        assert!(balanced_check(&[1, 1, 0], &t));
        assert!(!balanced_check(&[1, 0, 0], &t));
        assert_eq!(puncture_exponent(&t, "v0").unwrap(), vec![2, 2, 2]);
        assert!(puncture_exponent(&t, "v9").is_err());
    }

    #[test]
    fn json_round_trip_and_rejections() {
        let t = Triangulation::four_punctured_sphere();
        let back = Triangulation::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.puncture_names().collect::<Vec<_>>(), vec!["v0", "v1", "v2", "v3"]);
        let bad = r#"{"edges": 3, "triangles": [[0,1,2],[0,1,2]], "fans": {"v0": [0,1,2,0,1]}}"#;
        assert!(matches!(Triangulation::from_json(bad), Err(Error::MalformedTriangulation(_))));
        let bad = r#"{"edges": 3, "triangles": [[0,1,3],[0,1,2]], "fans": {"v0": [0,1,2,0,1,2]}}"#;
        assert!(Triangulation::from_json(bad).is_err());
        assert!(matches!(Triangulation::from_json("{"), Err(Error::Parse(_))));
    }
}
