//! The Borel–Weil–Bott algorithm on the Grassmannian `G` of projective
//! `r`-planes in `P^n`, i.e. of `(r+1)`-dimensional subspaces `Σ ⊂ V` with
//! `dim V = n + 1`.
//!
//! A homogeneous bundle `Γ^b Q ⊗ Γ^a Σ` (with `Q = V/Σ` the quotient, `b` of
//! length `n - r`, `a` of length `r + 1`) has cohomology concentrated in at
//! most one degree. Write `w = (b | a)` and `c_i = w_i - i` (1-based). If `c`
//! has a repeated entry every cohomology group vanishes. Otherwise, with
//!
//! * `q` = number of pairs `s < t` with `c_s < c_t`, and
//! * `ψ` = sort-descending(`c`) with `i` added back to the `i`-th entry,
//!
//! the only nonzero group is `H^q(G, Γ^b Q ⊗ Γ^a Σ) = Γ^ψ V`. Sorting a
//! repetition-free `c` strictly decreasing makes `ψ` weakly decreasing, so
//! the output is again a valid weight; its dimension comes from the Weyl
//! formula.
//!
//! Normalization anchors (all recovered in the tests): `H^0(Σ*) = V*`,
//! `H^0(det Σ*) = ∧^{r+1} V*`, and on `G(2, 4)` the bundle `Γ^{(3,1)}Σ` has
//! `H^2 = Γ^{(1,1,1,1)}V` of dimension 1.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec;
use crate::partition::Partition;
use crate::schur::{dim_irrep, ModuleSum};

/// The Grassmannian of projective `r`-planes in `P^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GrassmannContext {
    pub n: usize,
    pub r: usize,
}

impl GrassmannContext {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r < 1 || n <= r {
            return Err(Error::OutOfRange(format!(
                "need 1 <= r < n for planes in projective space, got r={r}, n={n}"
            )));
        }
        Ok(GrassmannContext { n, r })
    }

    /// `dim G = (r+1)(n-r)`.
    pub fn dim(&self) -> usize {
        (self.r + 1) * (self.n - self.r)
    }

    pub fn rank_sigma(&self) -> usize {
        self.r + 1
    }

    pub fn rank_q(&self) -> usize {
        self.n - self.r
    }

    pub fn rank_v(&self) -> usize {
        self.n + 1
    }
}

/// Result of the algorithm for a single bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BottOutcome {
    /// Every cohomology group vanishes.
    Zero,
    /// Exactly one nonzero group, `H^q = Γ^ψ V` of the given dimension.
    NonZero {
        q: usize,
        psi: Partition,
        dim: BigUint,
    },
}

impl Serialize for BottOutcome {
    /// `{"q": 2, "psi": [1,1,1,1], "dim": "1"}`, or with `q = null`,
    /// `psi = []`, `dim = "0"` for the vanishing outcome.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BottOutcome", 3)?;
        match self {
            BottOutcome::Zero => {
                st.serialize_field("q", &Option::<usize>::None)?;
                st.serialize_field("psi", &Partition::empty())?;
                st.serialize_field("dim", "0")?;
            }
            BottOutcome::NonZero { q, psi, dim } => {
                st.serialize_field("q", &Some(q))?;
                st.serialize_field("psi", psi)?;
                st.serialize_field("dim", &dim.to_string())?;
            }
        }
        st.end()
    }
}

/// Cohomology of `Γ^b Q ⊗ Γ^a Σ` on the Grassmannian.
pub fn bott(ctx: &GrassmannContext, b: &Partition, a: &Partition) -> Result<BottOutcome> {
    let b = b.padded(ctx.rank_q())?;
    let a = a.padded(ctx.rank_sigma())?;
    let mut c: Vec<i64> = Vec::with_capacity(ctx.rank_v());
    for (i, &w) in b.parts().iter().chain(a.parts()).enumerate() {
        c.push(i64::from(w) - (i as i64 + 1));
    }
    let mut sorted = c.clone();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(BottOutcome::Zero);
    }
    let mut q = 0usize;
    for s in 0..c.len() {
        for t in (s + 1)..c.len() {
            if c[s] < c[t] {
                q += 1;
            }
        }
    }
    let psi = Partition::new(
        sorted
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                i32::try_from(v + i as i64 + 1)
                    .map_err(|_| Error::OutOfRange("weight entry exceeds i32".into()))
            })
            .collect::<Result<Vec<i32>>>()?,
    )?;
    let dim = dim_irrep(&psi, ctx.rank_v())?;
    Ok(BottOutcome::NonZero { q, psi, dim })
}

/// Cohomology of `Γ^a Σ` (trivial quotient side).
pub fn bott_sigma(ctx: &GrassmannContext, a: &Partition) -> Result<BottOutcome> {
    bott(ctx, &Partition::zeros(ctx.rank_q()), a)
}

/// Cohomology of a sum of homogeneous bundles, grouped by degree. Keys of
/// `degrees` are the `q` with nonzero cohomology; values are sums of `Γ^ψ V`
/// as `GL(n+1)` modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CohomTable {
    pub rank_v: usize,
    pub degrees: BTreeMap<usize, ModuleSum>,
}

impl CohomTable {
    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn dims(&self) -> Result<BTreeMap<usize, BigUint>> {
        self.degrees
            .iter()
            .map(|(&q, ms)| Ok((q, ms.dimension()?)))
            .collect()
    }
}

/// Applies the algorithm to every component of `sigma_sum ⊗ Γ^{q_side} Q`,
/// twisted by `O(twist·H)` with `O(H) = det Σ*` the Plücker line bundle
/// (i.e. `a ↦ a - twist` on the `Σ` side). Components run in parallel.
pub fn cohomology_of_sum(
    ctx: &GrassmannContext,
    sigma_sum: &ModuleSum,
    q_side: &Partition,
    twist: i32,
) -> Result<CohomTable> {
    if sigma_sum.rank() != ctx.rank_sigma() {
        return Err(Error::RankMismatch(format!(
            "Σ-side sum has rank {}, context wants {}",
            sigma_sum.rank(),
            ctx.rank_sigma()
        )));
    }
    let b = q_side.padded(ctx.rank_q())?;
    let items: Vec<(Partition, BigUint)> = sigma_sum
        .iter()
        .map(|(lam, m)| (lam.det_twist(-twist), m.clone()))
        .collect();
    let ctx = *ctx;
    let results = exec::try_map(items, move |(a, m)| Ok((bott(&ctx, &b, &a)?, m)))?;
    let mut degrees: BTreeMap<usize, ModuleSum> = BTreeMap::new();
    for (outcome, mult) in results {
        if let BottOutcome::NonZero { q, psi, .. } = outcome {
            degrees
                .entry(q)
                .or_insert_with(|| ModuleSum::new(ctx.rank_v()))
                .add(&psi, mult)?;
        }
    }
    Ok(CohomTable {
        rank_v: ctx.rank_v(),
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::weakly_decreasing;

    fn p(parts: &[i32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn nonzero(o: BottOutcome) -> (usize, Partition, BigUint) {
        match o {
            BottOutcome::NonZero { q, psi, dim } => (q, psi, dim),
            BottOutcome::Zero => panic!("expected a nonzero outcome"),
        }
    }

    #[test]
    fn normalization_on_g24() {
        let ctx = GrassmannContext::new(3, 1).unwrap();
        let (q, psi, dim) = nonzero(bott_sigma(&ctx, &p(&[3, 1])).unwrap());
        assert_eq!((q, psi, dim), (2, p(&[1, 1, 1, 1]), BigUint::from(1u32)));
        let (q, psi, dim) = nonzero(bott_sigma(&ctx, &p(&[4, 4])).unwrap());
        assert_eq!((q, psi, dim), (4, p(&[2, 2, 2, 2]), BigUint::from(1u32)));
        assert_eq!(bott_sigma(&ctx, &p(&[2, 1])).unwrap(), BottOutcome::Zero);
        let (q, psi, dim) = nonzero(bott_sigma(&ctx, &p(&[0, -2])).unwrap());
        assert_eq!((q, psi, dim), (0, p(&[0, 0, 0, -2]), BigUint::from(10u32)));
    }

    #[test]
    fn global_sections_of_standard_bundles() {
        // H^0(Σ*) = V* on any Grassmannian
        for (n, r) in [(3, 1), (5, 2), (7, 3)] {
            let ctx = GrassmannContext::new(n, r).unwrap();
            let mut dual = vec![0i32; r + 1];
            dual[r] = -1;
            let (q, psi, dim) = nonzero(bott_sigma(&ctx, &p(&dual)).unwrap());
            assert_eq!(q, 0);
            let mut vdual = vec![0i32; n + 1];
            vdual[n] = -1;
            assert_eq!(psi, p(&vdual));
            assert_eq!(dim, BigUint::from(n as u32 + 1));
        }
        // H^0(O(1)) = H^0(det Σ*) = ∧^{r+1} V*
        let ctx = GrassmannContext::new(3, 1).unwrap();
        let (q, _, dim) = nonzero(bott_sigma(&ctx, &p(&[-1, -1])).unwrap());
        assert_eq!(q, 0);
        assert_eq!(dim, BigUint::from(6u32));
    }

    #[test]
    fn degree_is_a_multiple_of_rank_q_for_sigma_bundles() {
        for (n, r) in [(3usize, 1usize), (4, 1), (5, 2), (6, 2)] {
            let ctx = GrassmannContext::new(n, r).unwrap();
            for a in weakly_decreasing(r + 1, -4, 4) {
                if let BottOutcome::NonZero { q, .. } = bott_sigma(&ctx, &a).unwrap() {
                    assert_eq!(q % (n - r), 0, "n={n}, r={r}, a={a}");
                    assert!(q <= ctx.dim());
                }
            }
        }
    }

    #[test]
    fn serre_duality_mirrors_outcomes() {
        // H^q(E)* = H^{dim G - q}(E* ⊗ K_G) equivariantly, with
        // K_G = (det Σ)^{n-r} ⊗ (det Q)^{-(r+1)}.
        for (n, r) in [(3usize, 1usize), (5, 2)] {
            let ctx = GrassmannContext::new(n, r).unwrap();
            for a in weakly_decreasing(r + 1, -3, 3) {
                let plain = bott_sigma(&ctx, &a).unwrap();
                let a_dual = Partition::new(
                    a.parts()
                        .iter()
                        .rev()
                        .map(|&x| -x + (n - r) as i32)
                        .collect(),
                )
                .unwrap();
                let b_dual = Partition::new(vec![-(r as i32 + 1); n - r]).unwrap();
                let dual = bott(&ctx, &b_dual, &a_dual).unwrap();
                match (plain, dual) {
                    (BottOutcome::Zero, BottOutcome::Zero) => {}
                    (
                        BottOutcome::NonZero { q, psi, dim },
                        BottOutcome::NonZero {
                            q: q2,
                            psi: psi2,
                            dim: dim2,
                        },
                    ) => {
                        assert_eq!(q + q2, ctx.dim(), "a={a}");
                        assert_eq!(dim, dim2, "a={a}");
                        let mirrored = Partition::new(
                            psi.parts().iter().rev().map(|&x| -x).collect(),
                        )
                        .unwrap();
                        assert_eq!(psi2, mirrored, "a={a}");
                    }
                    (x, y) => panic!("duality mismatch for a={a}: {x:?} vs {y:?}"),
                }
            }
        }
    }

    #[test]
    fn sums_group_by_degree() {
        let ctx = GrassmannContext::new(3, 1).unwrap();
        let mut sum = ModuleSum::new(2);
        sum.add(&p(&[3, 1]), BigUint::from(2u32)).unwrap();
        sum.add(&p(&[0, -2]), BigUint::from(1u32)).unwrap();
        sum.add(&p(&[2, 1]), BigUint::from(5u32)).unwrap();
        let table = cohomology_of_sum(&ctx, &sum, &Partition::zeros(2), 0).unwrap();
        let dims = table.dims().unwrap();
        assert_eq!(dims.len(), 2);
        assert_eq!(dims[&0], BigUint::from(10u32));
        assert_eq!(dims[&2], BigUint::from(2u32));
        // twisting by O(H) changes the outcome degree-by-degree
        let twisted = cohomology_of_sum(&ctx, &sum, &Partition::zeros(2), 1).unwrap();
        assert_ne!(table, twisted);
    }

    #[test]
    fn outcome_serialization() {
        let ctx = GrassmannContext::new(3, 1).unwrap();
        let o = bott_sigma(&ctx, &p(&[3, 1])).unwrap();
        assert_eq!(
            serde_json::to_string(&o).unwrap(),
            r#"{"q":2,"psi":[1,1,1,1],"dim":"1"}"#
        );
        let z = bott_sigma(&ctx, &p(&[2, 1])).unwrap();
        assert_eq!(
            serde_json::to_string(&z).unwrap(),
            r#"{"q":null,"psi":[],"dim":"0"}"#
        );
    }
}
