//! Exterior powers of symmetric powers of the tautological bundle, and a
//! pruned search over their components.
//!
//! The basic objects are `∧^t Sym^d Σ` for `Σ` of rank `r + 1`, and exterior
//! powers `∧^t W` of direct sums `W = ⊕_i Sym^{d_i} Σ`. Two independent
//! routes are implemented:
//!
//! * `wedge_sym2` — for `d = 2` the decomposition is multiplicity-free and
//!   closed-form: `∧^t Sym^2` is the sum of `Γ^λ` over self-conjugate-shifted
//!   shapes built from partitions of `t` into distinct parts `p_1 > … > p_k`,
//!   via Frobenius coordinates `arms = (p_i)`, `legs = (p_i - 1)`;
//! * `wedge_symd` — for any `d`, the elementary symmetric polynomial `e_t` of
//!   the weight multiset of `Sym^d`, peeled into Schur characters.
//!
//! Both check their own total dimension against `binom(rank Sym^d, t)`, so a
//! wrong table cannot propagate silently. `∧^t W` distributes over the sum:
//! `∧^t W = ⊕_{t_1+…+t_s = t} ∧^{t_1} Sym^{d_1} ⊗ … ⊗ ∧^{t_s} Sym^{d_s}`,
//! computed in parallel over the compositions.
//!
//! [`search_components`] answers "does `∧^t W` contain a component with
//! prescribed lower bounds on given rows" without materializing the full
//! decomposition, by pruning compositions on weight, per-row caps, and
//! first-row reach, plus a closed-form short-circuit on the threshold rows.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::charpoly::CharPoly;
use crate::error::{Error, Result};
use crate::exec;
use crate::partition::Partition;
use crate::schur::ModuleSum;

/// `binom(n, k)` exactly.
pub fn binom_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// `binom(n, k)` as `i64`, with `0` for out-of-range arguments (negative or
/// `k > n`). Fails if the value does not fit.
pub fn binom_i64(n: i64, k: i64) -> Result<i64> {
    if k < 0 || n < 0 || k > n {
        return Ok(0);
    }
    let b = binom_big(n as u64, k as u64);
    i64::try_from(&b).map_err(|_| Error::OutOfRange(format!("binom({n},{k}) exceeds i64")))
}

/// Rank of `Sym^d` of a rank-`rank` space: `binom(d + rank - 1, rank - 1)`.
pub fn sym_rank(d: u32, rank: u32) -> Result<u64> {
    if rank == 0 {
        return Ok(if d == 0 { 1 } else { 0 });
    }
    let b = binom_big(u64::from(d) + u64::from(rank) - 1, u64::from(rank) - 1);
    u64::try_from(&b).map_err(|_| Error::OutOfRange(format!("rank of Sym^{d} exceeds u64")))
}

/// A direct sum `W = ⊕ Sym^{d_i} Σ*` (equivalently its dual; only the weight
/// combinatorics matter here), with `Σ` of rank `rank`. Degrees are kept
/// sorted decreasing and must be at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BundleSpec {
    rank: u32,
    degrees: Vec<u32>,
}

impl BundleSpec {
    pub fn new(rank: u32, mut degrees: Vec<u32>) -> Result<Self> {
        if rank < 2 {
            return Err(Error::OutOfRange(format!(
                "bundle rank must be at least 2, got {rank}"
            )));
        }
        if degrees.is_empty() || degrees.iter().any(|&d| d < 2) {
            return Err(Error::OutOfRange(format!(
                "degrees must be a nonempty list of integers >= 2, got {degrees:?}"
            )));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(BundleSpec { rank, degrees })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn count(&self) -> usize {
        self.degrees.len()
    }

    /// `rank W = Σ binom(d_i + rank - 1, rank - 1)`.
    pub fn rank_w(&self) -> Result<u64> {
        let mut total = 0u64;
        for &d in &self.degrees {
            total = total
                .checked_add(sym_rank(d, self.rank)?)
                .ok_or_else(|| Error::OutOfRange("rank W exceeds u64".into()))?;
        }
        Ok(total)
    }
}

/// Partitions of `t` into distinct positive parts, each at most `max_part`,
/// in decreasing lexicographic order.
fn distinct_parts(t: u32, max_part: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        let hi = cap.min(rem);
        for p in (1..=hi).rev() {
            // parts below p can still carry at most p(p-1)/2
            if rem - p > p * (p - 1) / 2 {
                continue;
            }
            cur.push(p);
            rec(rem - p, p - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(t, max_part, &mut Vec::new(), &mut out);
    out
}

/// Closed-form decomposition of `∧^t Sym^2` for `GL(rank)`: one component
/// `Γ^λ` per partition of `t` into distinct parts `p_1 > … > p_k ≤ rank`,
/// with `λ` given in Frobenius coordinates by `arms = (p_i)`,
/// `legs = (p_i - 1)`. Multiplicity-free.
pub fn wedge_sym2(t: u32, rank: u32) -> Result<ModuleSum> {
    let max = sym_rank(2, rank)?;
    if u64::from(t) > max {
        return Err(Error::OutOfRange(format!(
            "wedge degree {t} exceeds rank {max} of Sym^2"
        )));
    }
    let mut out = ModuleSum::new(rank as usize);
    if t == 0 {
        return Ok(ModuleSum::trivial(rank as usize));
    }
    for parts in distinct_parts(t, rank) {
        let arms: Vec<i32> = parts.iter().map(|&p| p as i32).collect();
        let legs: Vec<i32> = parts.iter().map(|&p| p as i32 - 1).collect();
        let lam = Partition::from_frobenius(&arms, &legs)?;
        // independent reading of the same coordinates, as a consistency check
        let f = lam.frobenius()?;
        if f.arms != arms || f.legs != legs {
            return Err(Error::Internal(format!(
                "hook coordinates of {lam} disagree with the distinct-part set {parts:?}"
            )));
        }
        out.add(&lam, BigUint::from(1u32))?;
    }
    let expect = binom_big(max, u64::from(t));
    let got = out.dimension()?;
    if got != expect {
        return Err(Error::Internal(format!(
            "dim ∧^{t} Sym^2 (rank {rank}) = {got}, expected {expect}"
        )));
    }
    Ok(out)
}

/// All exponent vectors of total degree `d` in `nvars` variables,
/// lexicographically ordered. The weight multiset of `Sym^d`.
fn sym_weights(d: u32, nvars: usize) -> Vec<Vec<u16>> {
    fn rec(var: usize, rem: u32, nvars: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if var == nvars - 1 {
            cur.push(rem as u16);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=rem).rev() {
            cur.push(e as u16);
            rec(var + 1, rem - e, nvars, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(0, d, nvars, &mut Vec::new(), &mut out);
    }
    out
}

type WedgeMemo = Mutex<HashMap<(u64, u32, u32), Arc<ModuleSum>>>;

fn wedge_memo() -> &'static WedgeMemo {
    static MEMO: OnceLock<WedgeMemo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Decomposition of `∧^t Sym^d Σ` for `Σ` of rank `rank`, by peeling the
/// elementary symmetric polynomial `e_t` of the `Sym^d` weight multiset.
/// Results are memoized globally; the total dimension is verified against
/// `binom(rank Sym^d, t)` before a table is accepted.
pub fn wedge_symd(t: u64, d: u32, rank: u32) -> Result<Arc<ModuleSum>> {
    if d == 0 || rank == 0 {
        return Err(Error::OutOfRange(format!(
            "wedge_symd needs d >= 1 and rank >= 1, got d={d}, rank={rank}"
        )));
    }
    let max = sym_rank(d, rank)?;
    if t > max {
        return Err(Error::OutOfRange(format!(
            "wedge degree {t} exceeds rank {max} of Sym^{d}"
        )));
    }
    let key = (t, d, rank);
    if let Some(hit) = wedge_memo().lock().unwrap().get(&key) {
        return Ok(Arc::clone(hit));
    }
    let weights = sym_weights(d, rank as usize);
    let e = CharPoly::elementary_of_weights(&weights, t as usize, rank as usize)?;
    let ms = e.peel_schur()?;
    let expect = binom_big(max, t);
    let got = ms.dimension()?;
    if got != expect {
        return Err(Error::Internal(format!(
            "dim ∧^{t} Sym^{d} (rank {rank}) = {got}, expected {expect}"
        )));
    }
    let arc = Arc::new(ms);
    wedge_memo()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert_with(|| Arc::clone(&arc));
    Ok(arc)
}

/// Compositions `(t_1, …, t_s)` of `total` with `t_i <= maxes[i]`, in
/// lexicographic order.
fn compositions(total: u64, maxes: &[u64]) -> Vec<Vec<u64>> {
    fn rec(i: usize, rem: u64, maxes: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == maxes.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let tail: u64 = maxes[i + 1..].iter().sum();
        let lo = rem.saturating_sub(tail);
        let hi = maxes[i].min(rem);
        for v in lo..=hi {
            cur.push(v);
            rec(i + 1, rem - v, maxes, cur, out);
            cur.pop();
        }
        // (lo..=hi is empty when lo > hi, i.e. the remainder cannot fit)
    }
    let mut out = Vec::new();
    rec(0, total, maxes, &mut Vec::new(), &mut out);
    out
}

/// Full decomposition of `∧^t W` for `W = ⊕ Sym^{d_i} Σ`, distributing over
/// compositions of `t` in parallel. Dimension-checked.
pub fn wedge_sum(spec: &BundleSpec, t: u64) -> Result<ModuleSum> {
    let rank_w = spec.rank_w()?;
    if t > rank_w {
        return Err(Error::OutOfRange(format!(
            "wedge degree {t} exceeds rank {rank_w} of W"
        )));
    }
    let rank = spec.rank as usize;
    let maxes: Vec<u64> = spec
        .degrees
        .iter()
        .map(|&d| sym_rank(d, spec.rank))
        .collect::<Result<_>>()?;
    let comps = compositions(t, &maxes);
    let degrees = spec.degrees.clone();
    let partials = exec::try_map(comps, |comp| {
        let mut acc = ModuleSum::trivial(rank);
        for (i, &ti) in comp.iter().enumerate() {
            let factor = wedge_symd(ti, degrees[i], rank as u32)?;
            acc = acc.tensor(&factor)?;
        }
        Ok(acc)
    })?;
    let mut out = ModuleSum::new(rank);
    for p in partials {
        out.merge(&p)?;
    }
    let expect = binom_big(rank_w, t);
    let got = out.dimension()?;
    if got != expect {
        return Err(Error::Internal(format!(
            "dim ∧^{t} W = {got}, expected {expect}"
        )));
    }
    Ok(out)
}

/// Lower bounds on chosen rows of a component. `mins[i] <= 0` leaves row `i`
/// unconstrained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowBounds {
    mins: Vec<i32>,
}

impl RowBounds {
    pub fn new(mins: Vec<i32>) -> Self {
        RowBounds { mins }
    }

    /// Constrains the single (0-based) row `row` to parts `>= min`.
    pub fn single(row: usize, min: i32) -> Self {
        let mut mins = vec![0; row + 1];
        mins[row] = min;
        RowBounds { mins }
    }

    fn padded(&self, rank: usize) -> Vec<i32> {
        let mut mins = self.mins.clone();
        mins.resize(rank, 0);
        mins
    }

    pub fn mins(&self) -> &[i32] {
        &self.mins
    }
}

/// Which pruning rules [`search_components`] may use. All default on; each
/// can be disabled independently to expose the slower routes for
/// cross-checking.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchOptions {
    /// Skip compositions whose total weight cannot reach the bound sum.
    pub weight_prune: bool,
    /// Cap each row of factors and partial products by the weight left over
    /// after the other rows' bounds.
    pub row_cap_prune: bool,
    /// Drop partial products whose constrained rows cannot be reached even if
    /// every remaining factor contributed its largest first part.
    pub first_row_prune: bool,
    /// Closed-form short-circuit: below the threshold wedge degree no
    /// component reaches the requested row bound at all.
    pub sym_row_bound: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            weight_prune: true,
            row_cap_prune: true,
            first_row_prune: true,
            sym_row_bound: true,
        }
    }
}

/// Outcome of a component search: every component of `∧^t W` meeting the row
/// bounds, with multiplicities, plus bookkeeping about the pruning.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchReport {
    pub witnesses: ModuleSum,
    pub compositions_total: u64,
    pub compositions_pruned: u64,
    pub short_circuit: Option<String>,
}

enum CompOutcome {
    Pruned,
    Done(ModuleSum),
}

/// Finds all components `Γ^ν ⊆ ∧^t W` with `ν_i >= bounds_i` on the
/// constrained rows, without materializing `∧^t W` when pruning applies.
pub fn search_components(
    spec: &BundleSpec,
    t: u64,
    bounds: &RowBounds,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    let rank = spec.rank as usize;
    let r = i64::from(spec.rank) - 1;
    if bounds.mins().len() > rank {
        return Err(Error::RankMismatch(format!(
            "row bounds name {} rows but the bundle has rank {rank}",
            bounds.mins().len()
        )));
    }
    let mut mins = bounds.padded(rank);
    // Rows of a partition weakly decrease, so a bound on row k is inherited
    // by every row above it. Folding that in does not change the answer but
    // makes the weight arithmetic below see the full cost of the bounds.
    for j in (0..rank.saturating_sub(1)).rev() {
        mins[j] = mins[j].max(mins[j + 1]);
    }
    let mins = mins;
    let bound_sum: i64 = mins.iter().map(|&b| i64::from(b.max(0))).sum();
    let empty = |note: String| SearchReport {
        witnesses: ModuleSum::new(rank),
        compositions_total: 0,
        compositions_pruned: 0,
        short_circuit: Some(note),
    };

    // Threshold short-circuit. For the 1-based row k = idx + 1 with bound b:
    // write s0 = max(0, Σ_i binom(d_i + r, r + 1) - b) and
    // T_k = Σ_i [binom(d_i + r, r) - binom(d_i + r - k, r - k)]. For
    // 0 < t < T_k - k·s0, no component of ∧^t W has row k as large as b.
    if opts.sym_row_bound && t > 0 {
        let cap_total: i64 = {
            let mut acc = 0i64;
            for &d in &spec.degrees {
                acc += binom_i64(i64::from(d) + r, r + 1)?;
            }
            acc
        };
        for (idx, &b) in mins.iter().enumerate() {
            let k = (idx + 1) as i64;
            if b <= 0 || k > r {
                continue;
            }
            let s0 = (cap_total - i64::from(b)).max(0);
            let mut t_k = 0i64;
            for &d in &spec.degrees {
                t_k += binom_i64(i64::from(d) + r, r)? - binom_i64(i64::from(d) + r - k, r - k)?;
            }
            if (t as i64) < t_k - k * s0 {
                return Ok(empty(format!(
                    "row {k} bound {b}: wedge degree {t} is below the threshold {}",
                    t_k - k * s0
                )));
            }
        }
    }

    let maxes: Vec<u64> = spec
        .degrees
        .iter()
        .map(|&d| sym_rank(d, spec.rank))
        .collect::<Result<_>>()?;

    // Largest achievable weight of a composition (degrees are sorted
    // decreasing, so fill greedily).
    if opts.weight_prune {
        let mut rem = t;
        let mut max_w = 0i64;
        for (i, &cap) in maxes.iter().enumerate() {
            let take = rem.min(cap);
            max_w += take as i64 * i64::from(spec.degrees[i]);
            rem -= take;
        }
        if rem > 0 || bound_sum > max_w {
            return Ok(empty(format!(
                "bound sum {bound_sum} exceeds the largest component weight {max_w}"
            )));
        }
    }

    let comps = compositions(t, &maxes);
    let total = comps.len() as u64;
    let degrees = spec.degrees.clone();
    let opts = *opts;
    let mins_shared = mins.clone();
    let outcomes = exec::try_map(comps, move |comp| {
        let mins = &mins_shared;
        let w: i64 = comp
            .iter()
            .zip(&degrees)
            .map(|(&ti, &d)| ti as i64 * i64::from(d))
            .sum();
        if opts.weight_prune && bound_sum > w {
            return Ok(CompOutcome::Pruned);
        }
        // Per-row caps: any component (or sub-tableau) row j obeys
        // ν_j <= w - Σ_{k≠j} bound_k.
        let caps: Vec<i64> = (0..rank)
            .map(|j| w - (bound_sum - i64::from(mins[j].max(0))))
            .collect();
        if (0..rank).any(|j| i64::from(mins[j].max(0)) > caps[j]) {
            return Ok(CompOutcome::Pruned);
        }
        let row_fits = |lam: &Partition| -> bool {
            (0..rank).all(|j| i64::from(lam.part(j)) <= caps[j])
        };
        let mut factors: Vec<ModuleSum> = Vec::with_capacity(comp.len());
        for (i, &ti) in comp.iter().enumerate() {
            let full = wedge_symd(ti, degrees[i], rank as u32)?;
            let kept = if opts.row_cap_prune {
                full.filter(&mut |lam: &Partition| row_fits(lam))
            } else {
                (*full).clone()
            };
            if kept.is_zero() {
                return Ok(CompOutcome::Pruned);
            }
            factors.push(kept);
        }
        // Suffix sums of the largest first part: how much any later factor
        // can still add to a single row.
        let firsts: Vec<i64> = factors
            .iter()
            .map(|f| i64::from(f.max_first_part().unwrap_or(0)))
            .collect();
        let mut reach = vec![0i64; factors.len() + 1];
        for i in (0..factors.len()).rev() {
            reach[i] = reach[i + 1] + firsts[i];
        }
        if opts.first_row_prune
            && (0..rank).any(|j| mins[j] > 0 && i64::from(mins[j]) > reach[0])
        {
            return Ok(CompOutcome::Pruned);
        }
        let mut partial = ModuleSum::trivial(rank);
        for (i, f) in factors.iter().enumerate() {
            partial = partial.tensor(f)?;
            let left = reach[i + 1];
            partial = partial.filter(&mut |lam: &Partition| {
                if opts.row_cap_prune && !row_fits(lam) {
                    return false;
                }
                if opts.first_row_prune {
                    for j in 0..rank {
                        if mins[j] > 0 && i64::from(lam.part(j)) + left < i64::from(mins[j]) {
                            return false;
                        }
                    }
                }
                true
            });
            if partial.is_zero() {
                return Ok(CompOutcome::Pruned);
            }
        }
        let hits = partial.filter(&mut |lam: &Partition| {
            (0..rank).all(|j| mins[j] <= 0 || lam.part(j) >= mins[j])
        });
        Ok(CompOutcome::Done(hits))
    })?;

    let mut witnesses = ModuleSum::new(rank);
    let mut pruned = 0u64;
    for o in outcomes {
        match o {
            CompOutcome::Pruned => pruned += 1,
            CompOutcome::Done(ms) => witnesses.merge(&ms)?,
        }
    }
    Ok(SearchReport {
        witnesses,
        compositions_total: total,
        compositions_pruned: pruned,
        short_circuit: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn terms(ms: &ModuleSum) -> Vec<(Partition, u64)> {
        ms.iter()
            .map(|(l, m)| (l.clone(), u64::try_from(m).unwrap()))
            .collect()
    }

    #[test]
    fn sym_ranks() {
        assert_eq!(sym_rank(2, 2).unwrap(), 3);
        assert_eq!(sym_rank(3, 2).unwrap(), 4);
        assert_eq!(sym_rank(2, 4).unwrap(), 10);
        assert_eq!(sym_rank(3, 3).unwrap(), 10);
        assert_eq!(sym_rank(4, 2).unwrap(), 5);
    }

    #[test]
    fn wedge_sym2_small_table() {
        let t3 = wedge_sym2(3, 4).unwrap();
        assert_eq!(
            terms(&t3),
            vec![(p(&[3, 3, 0, 0]), 1), (p(&[4, 1, 1, 0]), 1)]
        );
        let t1 = wedge_sym2(1, 4).unwrap();
        assert_eq!(terms(&t1), vec![(p(&[2, 0, 0, 0]), 1)]);
        let t10 = wedge_sym2(10, 4).unwrap();
        assert_eq!(terms(&t10), vec![(p(&[5, 5, 5, 5]), 1)]);
        assert!(wedge_sym2(11, 4).is_err());
    }

    #[test]
    fn wedge_sym2_matches_character_route() {
        for rank in 2..=4u32 {
            let max = sym_rank(2, rank).unwrap();
            for t in 0..=max {
                let closed = wedge_sym2(t as u32, rank).unwrap();
                let peeled = wedge_symd(t, 2, rank).unwrap();
                assert_eq!(closed, *peeled, "t={t}, rank={rank}");
            }
        }
    }

    #[test]
    fn wedge_symd_examples() {
        let w2 = wedge_symd(2, 3, 2).unwrap();
        assert_eq!(terms(&w2), vec![(p(&[3, 3]), 1), (p(&[5, 1]), 1)]);
        let w4 = wedge_symd(4, 3, 2).unwrap();
        assert_eq!(terms(&w4), vec![(p(&[6, 6]), 1)]);
        let w2r3 = wedge_symd(2, 3, 3).unwrap();
        assert_eq!(
            terms(&w2r3),
            vec![(p(&[3, 3, 0]), 1), (p(&[5, 1, 0]), 1)]
        );
        assert_eq!(w2r3.dimension().unwrap(), BigUint::from(45u32));
    }

    #[test]
    fn wedge_sum_two_quadrics() {
        let spec = BundleSpec::new(2, vec![2, 2]).unwrap();
        assert_eq!(spec.rank_w().unwrap(), 6);
        let w2 = wedge_sum(&spec, 2).unwrap();
        assert_eq!(
            terms(&w2),
            vec![(p(&[2, 2]), 1), (p(&[3, 1]), 3), (p(&[4, 0]), 1)]
        );
        assert_eq!(w2.dimension().unwrap(), BigUint::from(15u32));
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(compositions(2, &[3, 3]).len(), 3);
        assert_eq!(compositions(5, &[3, 3]).len(), 2); // (2,3), (3,2)
        assert_eq!(compositions(7, &[3, 3]).len(), 0);
        assert_eq!(compositions(0, &[3, 3]), vec![vec![0, 0]]);
    }

    #[test]
    fn search_agrees_with_filtering() {
        let spec = BundleSpec::new(2, vec![3, 2]).unwrap();
        let rank_w = spec.rank_w().unwrap();
        for t in 1..=rank_w.min(5) {
            let full = wedge_sum(&spec, t).unwrap();
            for bounds in [
                RowBounds::single(0, 6),
                RowBounds::single(1, 3),
                RowBounds::new(vec![5, 2]),
            ] {
                let mins = bounds.padded(2);
                let expected = full.filter(&mut |lam: &Partition| {
                    (0..2).all(|j| mins[j] <= 0 || lam.part(j) >= mins[j])
                });
                for opts in [
                    SearchOptions::default(),
                    SearchOptions {
                        sym_row_bound: false,
                        ..SearchOptions::default()
                    },
                    SearchOptions {
                        weight_prune: false,
                        row_cap_prune: false,
                        first_row_prune: false,
                        sym_row_bound: false,
                    },
                ] {
                    let got = search_components(&spec, t, &bounds, &opts).unwrap();
                    assert_eq!(got.witnesses, expected, "t={t}, bounds={bounds:?}");
                }
            }
        }
    }

    #[test]
    fn search_short_circuits_below_threshold() {
        // Sym^3 on rank 2: with the row-1 bound at binom(d+r, r+1) = 6 the
        // slack s0 is 0 and the threshold T_1 = 3 kicks in for t = 1, 2.
        // Sharp: ∧^3 Sym^3 = Γ^(6,3) does reach 6 exactly at t = 3.
        let spec = BundleSpec::new(2, vec![3]).unwrap();
        let bounds = RowBounds::single(0, 6);
        let hit = search_components(&spec, 2, &bounds, &SearchOptions::default()).unwrap();
        assert!(hit.short_circuit.is_some());
        assert!(hit.witnesses.is_zero());
        // and the slow route agrees that nothing is there
        let slow = search_components(
            &spec,
            2,
            &bounds,
            &SearchOptions {
                sym_row_bound: false,
                ..SearchOptions::default()
            },
        )
        .unwrap();
        assert!(slow.witnesses.is_zero());
        // at the threshold itself the witness appears
        let at = search_components(&spec, 3, &bounds, &SearchOptions::default()).unwrap();
        assert!(at.short_circuit.is_none());
        assert_eq!(terms(&at.witnesses), vec![(p(&[6, 3]), 1)]);
    }
}
