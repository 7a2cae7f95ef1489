//! Cohomology of bundles restricted to a Fano scheme of linear spaces, via
//! the Koszul resolution.
//!
//! Let `X ⊂ P^n` be a general complete intersection of degrees
//! `d_1 ≥ … ≥ d_s ≥ 2` and `F = F_r(X) ⊂ G` its scheme of projective
//! `r`-planes, the zero locus of the induced section of `⊕ Sym^{d_i} Σ*`.
//! With `W = ⊕ Sym^{d_i} Σ`, the Koszul complex `∧^• W → O_G → O_F → 0`
//! resolves `O_F`, so for a homogeneous `E` the hypercohomology spectral
//! sequence has first page `E_1^{-t,q} = H^q(G, ∧^t W ⊗ E)` converging to
//! `H^{q-t}(F, E|_F)`.
//!
//! [`koszul_table`] computes every nonzero first-page cell exactly and then
//! classifies each output degree `j`:
//!
//! * if no cell lies on the diagonal `q - t = j`, then `H^j = 0` exactly;
//! * if exactly one does and no differential (on any page: sources
//!   `(t+u, q+u-1)`, targets `(t-u, q-u+1)`, `u ≥ 1`) can touch it, its
//!   dimension is exact;
//! * otherwise the degree is reported ambiguous, together with its cells.
//!
//! For ambiguous degrees [`restricted_cohomology`] can optionally apply the
//! maximal-cancellation heuristic: every differential is assumed to have the
//! largest rank the two endpoint dimensions allow, processed page by page.
//! Values obtained that way are labelled `assumed`, never silently merged
//! with exact ones, and the leftover mass is checked against convergence
//! (nothing may survive outside `0 ≤ j ≤ dim F`); a violation flags the run
//! as inconsistent. Cancellation preserves the alternating sum along
//! diagonals, since each reduction hits adjacent diagonals with opposite
//! signs.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::bott::{cohomology_of_sum, GrassmannContext};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::plethysm::{binom_i64, wedge_sum, BundleSpec};
use crate::schur::ModuleSum;

/// A complete intersection `X ⊂ P^n` of the given degrees together with the
/// dimension `r` of the linear spaces parametrized by `F = F_r(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CIProblem {
    pub n: usize,
    pub degrees: Vec<u32>,
    pub r: usize,
}

impl CIProblem {
    pub fn new(n: usize, mut degrees: Vec<u32>, r: usize) -> Result<Self> {
        GrassmannContext::new(n, r)?;
        if degrees.is_empty() || degrees.iter().any(|&d| d < 2) {
            return Err(Error::OutOfRange(format!(
                "degrees must be a nonempty list of integers >= 2, got {degrees:?}"
            )));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CIProblem { n, degrees, r })
    }

    pub fn context(&self) -> GrassmannContext {
        GrassmannContext {
            n: self.n,
            r: self.r,
        }
    }

    pub fn bundle_spec(&self) -> Result<BundleSpec> {
        BundleSpec::new(self.r as u32 + 1, self.degrees.clone())
    }

    /// `dim F = (r+1)(n-r) - Σ binom(d_i + r, r)` (when nonnegative and the
    /// intersection is general).
    pub fn delta(&self) -> Result<i64> {
        let mut d = (self.r as i64 + 1) * (self.n as i64 - self.r as i64);
        for &deg in &self.degrees {
            d -= binom_i64(i64::from(deg) + self.r as i64, self.r as i64)?;
        }
        Ok(d)
    }

    /// `δ₋ = n - 2r - s`, the complete-intersection margin: how far the
    /// dimension of `X` exceeds `2r`, counted against the `s` hypersurfaces.
    pub fn delta_minus(&self) -> Result<i64> {
        Ok(self.n as i64 - 2 * self.r as i64 - self.degrees.len() as i64)
    }

    /// The canonical twist: `K_F = O(M·H)|_F` with
    /// `M = Σ binom(d_i + r, r + 1) - n - 1`.
    pub fn m_twist(&self) -> Result<i64> {
        let mut m = -(self.n as i64) - 1;
        for &deg in &self.degrees {
            m += binom_i64(i64::from(deg) + self.r as i64, self.r as i64 + 1)?;
        }
        Ok(m)
    }

    pub fn rank_w(&self) -> Result<u64> {
        self.bundle_spec()?.rank_w()
    }
}

/// The coefficient bundle `E` in `H^•(F, E|_F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefficientBundle {
    /// `Γ^a Σ` restricted to `F` (use the zero partition for `O_F`).
    SigmaSchur(Partition),
    /// `Ω¹_G` restricted to `F`, i.e. `Γ^{(0,…,0,-1)} Q ⊗ Γ^{(1,0,…,0)} Σ`.
    Cotangent,
}

impl CoefficientBundle {
    pub fn trivial() -> Self {
        CoefficientBundle::SigmaSchur(Partition::empty())
    }

    pub fn sym_sigma(k: u32) -> Self {
        CoefficientBundle::SigmaSchur(Partition::new_unchecked(vec![k as i32]))
    }

    fn display_name(&self, rank_sigma: usize) -> String {
        match self {
            CoefficientBundle::Cotangent => "Omega^1|F".to_string(),
            CoefficientBundle::SigmaSchur(a) => {
                let a = a.trimmed();
                if a.is_empty() {
                    "O_F".to_string()
                } else if a.len() == 1 && a.first() > 0 {
                    format!("Sym^{} Sigma", a.first())
                } else {
                    let _ = rank_sigma;
                    format!("Gamma^({a}) Sigma")
                }
            }
        }
    }
}

/// One nonzero first-page cell `E_1^{-t,q} = H^q(G, ∧^t W ⊗ E)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub t: u64,
    pub q: usize,
    pub modules: ModuleSum,
    pub dim: BigUint,
}

impl Serialize for Cell {
    /// `{"t": …, "q": …, "dim": "…", "terms": [{"partition": […], "mult": "…"}]}`
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(&'a Partition, &'a BigUint);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut st = s.serialize_struct("Term", 2)?;
                st.serialize_field("partition", self.0)?;
                st.serialize_field("mult", &self.1.to_string())?;
                st.end()
            }
        }
        struct Terms<'a>(&'a ModuleSum);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let terms: Vec<(&Partition, &BigUint)> = self.0.iter().collect();
                let mut seq = s.serialize_seq(Some(terms.len()))?;
                for (lam, m) in terms.into_iter().rev() {
                    seq.serialize_element(&Term(lam, m))?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("Cell", 4)?;
        st.serialize_field("t", &self.t)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("dim", &self.dim.to_string())?;
        st.serialize_field("terms", &Terms(&self.modules))?;
        st.end()
    }
}

/// Status of one output degree `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeStatus {
    Exact { dim: BigUint },
    Ambiguous { cells: Vec<(u64, usize)> },
}

impl Serialize for DegreeStatus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DegreeStatus::Exact { dim } => {
                let mut st = s.serialize_struct("DegreeStatus", 2)?;
                st.serialize_field("status", "exact")?;
                st.serialize_field("dim", &dim.to_string())?;
                st.end()
            }
            DegreeStatus::Ambiguous { cells } => {
                let mut st = s.serialize_struct("DegreeStatus", 2)?;
                st.serialize_field("status", "ambiguous")?;
                st.serialize_field("cells", cells)?;
                st.end()
            }
        }
    }
}

/// The full first page plus the per-degree classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulTable {
    pub problem: CIProblem,
    pub twist: i32,
    pub coefficient: String,
    pub delta: i64,
    pub report_cap: i64,
    pub cells: Vec<Cell>,
    pub by_degree: BTreeMap<i64, DegreeStatus>,
}

impl Serialize for KoszulTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct StringKeyed<'a, V: Serialize>(&'a BTreeMap<i64, V>);
        impl<V: Serialize> Serialize for StringKeyed<'_, V> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    map.serialize_entry(&k.to_string(), v)?;
                }
                map.end()
            }
        }
        let mut st = s.serialize_struct("KoszulTable", 7)?;
        st.serialize_field("problem", &self.problem)?;
        st.serialize_field("twist", &self.twist)?;
        st.serialize_field("coefficient", &self.coefficient)?;
        st.serialize_field("delta", &self.delta)?;
        st.serialize_field("reportCap", &self.report_cap)?;
        st.serialize_field("cells", &self.cells)?;
        st.serialize_field("byDegree", &StringKeyed(&self.by_degree))?;
        st.end()
    }
}

impl KoszulTable {
    /// Dimensions per diagonal `j = q - t`, before any cancellation.
    pub fn diagonal_mass(&self) -> BTreeMap<i64, BigUint> {
        let mut mass: BTreeMap<i64, BigUint> = BTreeMap::new();
        for cell in &self.cells {
            let j = cell.q as i64 - cell.t as i64;
            *mass.entry(j).or_default() += &cell.dim;
        }
        mass
    }

    /// Maximal cancellation: page by page (`u = 1, 2, …`), every potential
    /// differential removes as much as both endpoints allow. Returns the
    /// leftover dimension per diagonal and whether the leftovers are
    /// consistent with convergence (`0` outside `0 ≤ j ≤ δ`).
    pub fn max_cancellation(&self) -> CancelOutcome {
        let mut rem: BTreeMap<(u64, usize), BigUint> = self
            .cells
            .iter()
            .map(|c| ((c.t, c.q), c.dim.clone()))
            .collect();
        let mut edges: Vec<(u64, u64, usize)> = Vec::new();
        for c in &self.cells {
            for u in 1..=c.t {
                if c.q as u64 + 1 < u {
                    break;
                }
                let target = (c.t - u, c.q + 1 - u as usize);
                if rem.contains_key(&target) {
                    edges.push((u, c.t, c.q));
                }
            }
        }
        edges.sort_unstable();
        for (u, t, q) in edges {
            let target = (t - u, q + 1 - u as usize);
            let m = rem[&(t, q)].clone().min(rem[&target].clone());
            if m.is_zero() {
                continue;
            }
            *rem.get_mut(&(t, q)).unwrap() -= &m;
            *rem.get_mut(&target).unwrap() -= &m;
        }
        let mut dims: BTreeMap<i64, BigUint> = BTreeMap::new();
        for ((t, q), d) in &rem {
            if !d.is_zero() {
                *dims.entry(*q as i64 - *t as i64).or_default() += d;
            }
        }
        let consistent = dims
            .iter()
            .all(|(&j, d)| d.is_zero() || (0 <= j && j <= self.delta));
        CancelOutcome { dims, consistent }
    }
}

/// Result of [`KoszulTable::max_cancellation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancelOutcome {
    pub dims: BTreeMap<i64, BigUint>,
    pub consistent: bool,
}

impl Serialize for CancelOutcome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Dims<'a>(&'a BTreeMap<i64, BigUint>);
        impl Serialize for Dims<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    map.serialize_entry(&k.to_string(), &v.to_string())?;
                }
                map.end()
            }
        }
        let mut st = s.serialize_struct("CancelOutcome", 2)?;
        st.serialize_field("dims", &Dims(&self.dims))?;
        st.serialize_field("consistent", &self.consistent)?;
        st.end()
    }
}

/// Computes the full first page for `E ⊗ O(twist·H)` and classifies degrees
/// `0 ≤ j ≤ δ + 2`.
pub fn koszul_table(prob: &CIProblem, e: &CoefficientBundle, twist: i32) -> Result<KoszulTable> {
    let ctx = prob.context();
    let spec = prob.bundle_spec()?;
    let rank_w = spec.rank_w()?;
    let rank_sigma = ctx.rank_sigma();
    let (e_sigma, q_side) = match e {
        CoefficientBundle::SigmaSchur(a) => {
            let mut ms = ModuleSum::new(rank_sigma);
            ms.add(a, BigUint::from(1u32))?;
            (ms, Partition::zeros(ctx.rank_q()))
        }
        CoefficientBundle::Cotangent => {
            let mut ms = ModuleSum::new(rank_sigma);
            let mut sigma = vec![0i32; rank_sigma];
            sigma[0] = 1;
            ms.add(&Partition::new_unchecked(sigma), BigUint::from(1u32))?;
            let mut b = vec![0i32; ctx.rank_q()];
            b[ctx.rank_q() - 1] = -1;
            (ms, Partition::new_unchecked(b))
        }
    };

    let mut cells = Vec::new();
    for t in 0..=rank_w {
        let base = wedge_sum(&spec, t)?;
        let tensored = base.tensor(&e_sigma)?;
        let table = cohomology_of_sum(&ctx, &tensored, &q_side, twist)?;
        for (q, modules) in table.degrees {
            let dim = modules.dimension()?;
            cells.push(Cell {
                t,
                q,
                modules,
                dim,
            });
        }
    }
    cells.sort_by_key(|c| (c.t, c.q));

    let delta = prob.delta()?;
    let report_cap = (delta + 2).max(0);
    let occupied: std::collections::BTreeSet<(u64, usize)> =
        cells.iter().map(|c| (c.t, c.q)).collect();
    let mut by_degree = BTreeMap::new();
    for j in 0..=report_cap {
        let on_diag: Vec<&Cell> = cells
            .iter()
            .filter(|c| c.q as i64 - c.t as i64 == j)
            .collect();
        let status = match on_diag.len() {
            0 => DegreeStatus::Exact {
                dim: BigUint::zero(),
            },
            1 => {
                let c = on_diag[0];
                let touched = occupied.iter().any(|&(t2, q2)| {
                    if t2 == c.t && q2 == c.q {
                        return false;
                    }
                    let dt = t2 as i64 - c.t as i64;
                    let dq = q2 as i64 - c.q as i64;
                    // incoming: (t+u, q+u-1); outgoing target: (t-u, q-u+1)
                    (dt >= 1 && dq == dt - 1) || (dt <= -1 && dq == dt + 1)
                });
                if touched {
                    DegreeStatus::Ambiguous {
                        cells: vec![(c.t, c.q)],
                    }
                } else {
                    DegreeStatus::Exact { dim: c.dim.clone() }
                }
            }
            _ => DegreeStatus::Ambiguous {
                cells: on_diag.iter().map(|c| (c.t, c.q)).collect(),
            },
        };
        by_degree.insert(j, status);
    }

    Ok(KoszulTable {
        problem: prob.clone(),
        twist,
        coefficient: e.display_name(rank_sigma),
        delta,
        report_cap,
        cells,
        by_degree,
    })
}

/// What may be assumed when a degree is not exact.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Assumptions {
    pub max_cancellation: bool,
}

/// One reported value of `h^j(F, E|_F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeValue {
    Exact(BigUint),
    /// Obtained under maximal cancellation; correct whenever the true
    /// differentials have maximal rank.
    Assumed(BigUint),
    Ambiguous(Vec<(u64, usize)>),
}

impl DegreeValue {
    pub fn value(&self) -> Option<&BigUint> {
        match self {
            DegreeValue::Exact(d) | DegreeValue::Assumed(d) => Some(d),
            DegreeValue::Ambiguous(_) => None,
        }
    }
}

impl Serialize for DegreeValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DegreeValue", 2)?;
        match self {
            DegreeValue::Exact(d) => {
                st.serialize_field("kind", "exact")?;
                st.serialize_field("dim", &d.to_string())?;
            }
            DegreeValue::Assumed(d) => {
                st.serialize_field("kind", "assumed")?;
                st.serialize_field("dim", &d.to_string())?;
            }
            DegreeValue::Ambiguous(cells) => {
                st.serialize_field("kind", "ambiguous")?;
                st.serialize_field("cells", cells)?;
            }
        }
        st.end()
    }
}

/// `h^j(F, E ⊗ O(twist·H)|_F)` for `0 ≤ j ≤ δ + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedCohomology {
    pub table: KoszulTable,
    pub values: BTreeMap<i64, DegreeValue>,
    /// `Some(false)` when maximal cancellation left mass outside the
    /// convergence window; `None` when no cancellation was needed.
    pub consistent: Option<bool>,
}

impl Serialize for RestrictedCohomology {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct StringKeyed<'a, V: Serialize>(&'a BTreeMap<i64, V>);
        impl<V: Serialize> Serialize for StringKeyed<'_, V> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    map.serialize_entry(&k.to_string(), v)?;
                }
                map.end()
            }
        }
        let mut st = s.serialize_struct("RestrictedCohomology", 3)?;
        st.serialize_field("values", &StringKeyed(&self.values))?;
        st.serialize_field("consistent", &self.consistent)?;
        st.serialize_field("table", &self.table)?;
        st.end()
    }
}

pub fn restricted_cohomology(
    prob: &CIProblem,
    e: &CoefficientBundle,
    twist: i32,
    assume: &Assumptions,
) -> Result<RestrictedCohomology> {
    let table = koszul_table(prob, e, twist)?;
    let needs_cancel = table
        .by_degree
        .values()
        .any(|s| matches!(s, DegreeStatus::Ambiguous { .. }));
    let cancel = if needs_cancel && assume.max_cancellation {
        Some(table.max_cancellation())
    } else {
        None
    };
    let mut values = BTreeMap::new();
    for (&j, status) in &table.by_degree {
        let v = match status {
            DegreeStatus::Exact { dim } => DegreeValue::Exact(dim.clone()),
            DegreeStatus::Ambiguous { cells } => match &cancel {
                Some(c) => DegreeValue::Assumed(c.dims.get(&j).cloned().unwrap_or_default()),
                None => DegreeValue::Ambiguous(cells.clone()),
            },
        };
        values.insert(j, v);
    }
    Ok(RestrictedCohomology {
        consistent: cancel.as_ref().map(|c| c.consistent),
        table,
        values,
    })
}

/// The `h^{1,1}` bookkeeping for the even-dimensional intersection of two
/// quadrics containing `r`-planes: `n = 2r + 4`, degrees `(2, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TwoQuadricsHodge {
    pub r: usize,
    pub n: usize,
    #[serde(serialize_with = "crate::ser::biguint_str")]
    pub h2_sym2: BigUint,
    #[serde(serialize_with = "crate::ser::biguint_str")]
    pub h1_omega: BigUint,
    #[serde(serialize_with = "crate::ser::biguint_str")]
    pub h2_omega: BigUint,
    #[serde(serialize_with = "crate::ser::biguint_str")]
    pub h11: BigUint,
    pub consistent: bool,
}

/// Computes `h^{1,1}(F)` for the two-quadrics family via
/// `h^{1,1} = h^1(Ω¹_G|F) + 2·h^2(Sym^2 Σ|F) - h^2(Ω¹_G|F)` (the normal and
/// Euler sequence bookkeeping), under maximal cancellation where a degree is
/// not already exact.
pub fn two_quadrics_hodge(r: usize) -> Result<TwoQuadricsHodge> {
    let n = 2 * r + 4;
    let prob = CIProblem::new(n, vec![2, 2], r)?;
    let assume = Assumptions {
        max_cancellation: true,
    };
    let sym2 = restricted_cohomology(&prob, &CoefficientBundle::sym_sigma(2), 0, &assume)?;
    let omega = restricted_cohomology(&prob, &CoefficientBundle::Cotangent, 0, &assume)?;
    let grab = |rc: &RestrictedCohomology, j: i64, what: &str| -> Result<BigUint> {
        rc.values
            .get(&j)
            .and_then(|v| v.value().cloned())
            .ok_or_else(|| Error::Internal(format!("h^{j}({what}) not resolved")))
    };
    let h2_sym2 = grab(&sym2, 2, "Sym^2")?;
    let h1_omega = grab(&omega, 1, "Omega")?;
    let h2_omega = grab(&omega, 2, "Omega")?;
    let sum = &h1_omega + BigUint::from(2u32) * &h2_sym2;
    if sum < h2_omega {
        return Err(Error::Internal(
            "h^{1,1} bookkeeping produced a negative value".into(),
        ));
    }
    let h11 = sum - &h2_omega;
    let consistent = sym2.consistent.unwrap_or(true) && omega.consistent.unwrap_or(true);
    Ok(TwoQuadricsHodge {
        r,
        n,
        h2_sym2,
        h1_omega,
        h2_omega,
        h11,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn exact_dim(table: &KoszulTable, j: i64) -> Option<BigUint> {
        match table.by_degree.get(&j) {
            Some(DegreeStatus::Exact { dim }) => Some(dim.clone()),
            _ => None,
        }
    }

    #[test]
    fn invariants() {
        let cubic_surface_lines = CIProblem::new(3, vec![3], 1).unwrap();
        assert_eq!(cubic_surface_lines.delta().unwrap(), 0);
        let q = CIProblem::new(4, vec![3], 1).unwrap();
        assert_eq!(q.delta().unwrap(), 2);
        assert_eq!(q.delta_minus().unwrap(), 1);
        assert_eq!(q.m_twist().unwrap(), 1);
        let c2 = CIProblem::new(7, vec![3], 2).unwrap();
        assert_eq!(c2.delta().unwrap(), 5);
        assert_eq!(c2.delta_minus().unwrap(), 2);
        assert_eq!(c2.m_twist().unwrap(), 2);
        let two_quadrics = CIProblem::new(5, vec![2, 2], 1).unwrap();
        assert_eq!(two_quadrics.delta().unwrap(), 2);
        assert_eq!(two_quadrics.m_twist().unwrap(), 0);
        for r in 1..=3usize {
            let tq = CIProblem::new(2 * r + 3, vec![2, 2], r).unwrap();
            assert_eq!(tq.delta().unwrap(), r as i64 + 1);
            assert_eq!(tq.delta_minus().unwrap(), 1);
        }
    }

    #[test]
    fn quadric_sym2_table_r1() {
        // planes on the quadric in P^5: a single exact cell at (t,q) = (2,4)
        let prob = CIProblem::new(5, vec![2], 1).unwrap();
        let table = koszul_table(&prob, &CoefficientBundle::sym_sigma(2), 0).unwrap();
        let nonzero: Vec<(u64, usize)> = table.cells.iter().map(|c| (c.t, c.q)).collect();
        assert_eq!(nonzero, vec![(2, 4)]);
        assert_eq!(exact_dim(&table, 2), Some(BigUint::from(1u32)));
        for j in [0i64, 1, 3, 4] {
            assert_eq!(exact_dim(&table, j), Some(BigUint::zero()), "j={j}");
        }
    }

    #[test]
    fn quadric_sym2_vanishes_in_odd_case_r1() {
        // lines on the quadric in P^4: two cells that cancel completely
        let prob = CIProblem::new(4, vec![2], 1).unwrap();
        let table = koszul_table(&prob, &CoefficientBundle::sym_sigma(2), 0).unwrap();
        let nonzero: Vec<(u64, usize, BigUint)> = table
            .cells
            .iter()
            .map(|c| (c.t, c.q, c.dim.clone()))
            .collect();
        assert_eq!(
            nonzero,
            vec![
                (1, 3, BigUint::from(5u32)),
                (2, 3, BigUint::from(5u32))
            ]
        );
        let cancel = table.max_cancellation();
        assert!(cancel.consistent);
        assert!(cancel.dims.values().all(|d| d.is_zero()));
        // and the degrees were (correctly) not claimed exact
        assert!(matches!(
            table.by_degree.get(&1),
            Some(DegreeStatus::Ambiguous { .. })
        ));
        assert!(matches!(
            table.by_degree.get(&2),
            Some(DegreeStatus::Ambiguous { .. })
        ));
    }

    #[test]
    fn quadric_omega_r1() {
        let prob = CIProblem::new(5, vec![2], 1).unwrap();
        let omega = restricted_cohomology(
            &prob,
            &CoefficientBundle::Cotangent,
            0,
            &Assumptions::default(),
        )
        .unwrap();
        assert_eq!(
            omega.values.get(&1),
            Some(&DegreeValue::Exact(BigUint::from(1u32)))
        );
        assert_eq!(
            omega.values.get(&0),
            Some(&DegreeValue::Exact(BigUint::zero()))
        );
    }

    #[test]
    fn two_quadrics_r1_cells() {
        let prob = CIProblem::new(6, vec![2, 2], 1).unwrap();
        let table = koszul_table(&prob, &CoefficientBundle::sym_sigma(2), 0).unwrap();
        // the two structural cells on diagonals 2 and 3
        let c35 = table.cells.iter().find(|c| (c.t, c.q) == (3, 5)).unwrap();
        assert_eq!(c35.dim, BigUint::from(14u32));
        assert_eq!(
            c35.modules.multiplicity(&p(&[2, 1, 1, 1, 1, 1, 1])),
            BigUint::from(2u32)
        );
        let c25 = table.cells.iter().find(|c| (c.t, c.q) == (2, 5)).unwrap();
        assert_eq!(c25.dim, BigUint::from(7u32));
        assert_eq!(
            c25.modules.multiplicity(&p(&[1, 1, 1, 1, 1, 1, 0])),
            BigUint::from(1u32)
        );
        // no other first-page cells, and nothing on the top diagonal
        assert_eq!(table.cells.len(), 2);
        assert_eq!(exact_dim(&table, 4), Some(BigUint::zero()));
    }

    #[test]
    fn two_quadrics_canonical_twist_r1() {
        // K_F = O(-H)|_F here; the top Koszul term contributes the single
        // cell H^{dim G}(K_G) = C on the diagonal j = delta.
        let prob = CIProblem::new(6, vec![2, 2], 1).unwrap();
        assert_eq!(prob.m_twist().unwrap(), -1);
        let table = koszul_table(&prob, &CoefficientBundle::trivial(), -1).unwrap();
        let top = table.cells.iter().find(|c| (c.t, c.q) == (6, 10)).unwrap();
        assert_eq!(top.dim, BigUint::from(1u32));
        assert_eq!(
            top.modules.multiplicity(&p(&[2, 2, 2, 2, 2, 2, 2])),
            BigUint::from(1u32)
        );
        assert_eq!(exact_dim(&table, 4), Some(BigUint::from(1u32)));
    }

    #[test]
    fn two_quadrics_hodge_r1() {
        let h = two_quadrics_hodge(1).unwrap();
        assert!(h.consistent);
        assert_eq!(h.h2_sym2, BigUint::from(7u32));
        assert_eq!(h.h1_omega, BigUint::from(1u32));
        assert_eq!(h.h2_omega, BigUint::from(7u32));
        assert_eq!(h.h11, BigUint::from(8u32));
    }

    #[test]
    fn cancellation_preserves_euler_characteristic() {
        let prob = CIProblem::new(6, vec![2, 2], 1).unwrap();
        let table = koszul_table(&prob, &CoefficientBundle::sym_sigma(2), 0).unwrap();
        let before = table.diagonal_mass();
        let after = table.max_cancellation().dims;
        assert_ne!(before, after); // the (3,5) -> (2,5) differential fires
        let signed = |m: &BTreeMap<i64, BigUint>| -> num_bigint::BigInt {
            m.iter()
                .map(|(&j, d)| {
                    let v = num_bigint::BigInt::from(d.clone());
                    if j.rem_euclid(2) == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .sum()
        };
        assert_eq!(signed(&before), signed(&after));
    }
}
