//! Exact symmetric polynomials in the character ring of `GL(n)`.
//!
//! This is the crate's second, independent route to module decompositions.
//! A virtual character is stored as a finite sum of monomials
//! `c · x_1^{e_1} ⋯ x_n^{e_n}` with `i128` coefficients. Schur characters are
//! built by enumerating semistandard tableaux, elementary symmetric
//! polynomials of a weight multiset by the standard one-pass DP, and any
//! symmetric polynomial with non-negative Schur support can be peeled back
//! into a [`ModuleSum`] greedily: the lexicographically largest monomial of a
//! symmetric polynomial is dominant, so it names the leading Schur term.
//! Peeling a polynomial that is not a non-negative sum of Schur characters
//! fails with an internal error, which is exactly the tripwire the rest of
//! the crate wants.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur::ModuleSum;

/// A polynomial in `nvars` variables with exact integer coefficients,
/// indexed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, i128>,
}

fn checked_add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b)
        .ok_or_else(|| Error::Internal("coefficient overflow in character arithmetic".into()))
}

fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b)
        .ok_or_else(|| Error::Internal("coefficient overflow in character arithmetic".into()))
}

fn exp_add(a: &[u16], b: &[u16]) -> Result<Vec<u16>> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            let s = u32::from(x) + u32::from(y);
            u16::try_from(s)
                .map_err(|_| Error::Internal("exponent overflow in character arithmetic".into()))
        })
        .collect()
}

impl CharPoly {
    pub fn zero(nvars: usize) -> Self {
        CharPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = CharPoly::zero(nvars);
        p.terms.insert(vec![0; nvars], 1);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exp: Vec<u16>, c: i128) -> Result<()> {
        debug_assert_eq!(exp.len(), self.nvars);
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = checked_add(*e.get(), c)?;
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn add_assign(&mut self, other: &CharPoly) -> Result<()> {
        self.sub_scaled(other, -1)
    }

    /// Subtracts `c · other` in place.
    pub fn sub_scaled(&mut self, other: &CharPoly, c: i128) -> Result<()> {
        if other.nvars != self.nvars {
            return Err(Error::RankMismatch(format!(
                "polynomial in {} variables combined with {}",
                other.nvars, self.nvars
            )));
        }
        for (e, &co) in &other.terms {
            let prod = checked_mul(co, c)?;
            self.add_term(e.clone(), -prod)?;
        }
        Ok(())
    }

    /// The product with the single monomial `x^exp`.
    pub fn shift(&self, exp: &[u16]) -> Result<CharPoly> {
        let mut out = CharPoly::zero(self.nvars);
        for (e, &c) in &self.terms {
            out.terms.insert(exp_add(e, exp)?, c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &CharPoly) -> Result<CharPoly> {
        if other.nvars != self.nvars {
            return Err(Error::RankMismatch(format!(
                "polynomial in {} variables combined with {}",
                other.nvars, self.nvars
            )));
        }
        let mut out = CharPoly::zero(self.nvars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                out.add_term(exp_add(ea, eb)?, checked_mul(ca, cb)?)?;
            }
        }
        Ok(out)
    }

    /// The Schur character of `λ` in `nvars` variables, by semistandard
    /// tableau enumeration. `λ` must be non-negative; with more than `nvars`
    /// positive rows the character is zero.
    pub fn schur(lam: &Partition, nvars: usize) -> Result<CharPoly> {
        if !lam.is_nonnegative() {
            return Err(Error::InvalidPartition(format!(
                "Schur characters take non-negative partitions, got {lam}"
            )));
        }
        let mut out = CharPoly::zero(nvars);
        if lam.positive_rows() > nvars {
            return Ok(out);
        }
        let shape = lam.padded(nvars)?;
        let cap = shape.parts().to_vec();
        let conj = lam.conjugate()?;

        // required[v][i]: boxes row i must hold once values 0..=v are placed.
        // A box with b boxes below it in its column can only carry values up
        // to nvars - b, because entries grow strictly down each column.
        let mut required = vec![vec![0i32; nvars]; nvars];
        for (v, row) in required.iter_mut().enumerate() {
            for (i, slot) in row.iter_mut().enumerate() {
                let threshold = (nvars + i) as i32 - v as i32;
                *slot = (0..cap[i].max(0) as usize)
                    .filter(|&j| conj.part(j) >= threshold)
                    .count() as i32;
            }
        }

        let mut walker = SchurWalker {
            cap,
            required,
            out: CharPoly::zero(nvars),
        };
        let mut shape = vec![0i32; nvars];
        let mut content = vec![0u16; nvars];
        walker.fill_value(0, &mut shape, &mut content)?;
        out = walker.out;
        Ok(out)
    }

    /// `e_t` of the multiset of monomials given by `weights` (each a full
    /// exponent vector), via the one-pass elementary-symmetric DP.
    pub fn elementary_of_weights(weights: &[Vec<u16>], t: usize, nvars: usize) -> Result<CharPoly> {
        if weights.iter().any(|w| w.len() != nvars) {
            return Err(Error::RankMismatch(
                "weight vector length differs from variable count".into(),
            ));
        }
        if t > weights.len() {
            return Ok(CharPoly::zero(nvars));
        }
        let mut e: Vec<CharPoly> = Vec::with_capacity(t + 1);
        e.push(CharPoly::one(nvars));
        for _ in 0..t {
            e.push(CharPoly::zero(nvars));
        }
        for w in weights {
            for k in (1..=t).rev() {
                let bump = e[k - 1].shift(w)?;
                e[k].add_assign(&bump)?;
            }
        }
        Ok(e.swap_remove(t))
    }

    /// Greedy Schur decomposition. Consumes the polynomial; fails with an
    /// internal error if it is not symmetric with non-negative Schur
    /// multiplicities.
    pub fn peel_schur(mut self) -> Result<ModuleSum> {
        let rank = self.nvars;
        let mut out = ModuleSum::new(rank);
        loop {
            let (exp, coeff) = match self.terms.last_key_value() {
                None => break,
                Some((e, &c)) => (e.clone(), c),
            };
            if coeff < 0 {
                return Err(Error::Internal(format!(
                    "negative leading multiplicity {coeff} while peeling a character"
                )));
            }
            if exp.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Internal(
                    "leading monomial of a symmetric polynomial is not dominant".into(),
                ));
            }
            let lam = Partition::new_unchecked(exp.iter().map(|&e| e as i32).collect());
            let sc = CharPoly::schur(&lam, rank)?;
            self.sub_scaled(&sc, coeff)?;
            if self.terms.contains_key(&exp) {
                return Err(Error::Internal(
                    "peeling failed to clear the leading monomial".into(),
                ));
            }
            out.add(&lam, BigUint::from(coeff as u128))?;
        }
        Ok(out)
    }

    /// Value at `x_i = 1` for all `i`; the dimension when the polynomial is a
    /// genuine character.
    pub fn dimension(&self) -> Result<BigUint> {
        let mut total: i128 = 0;
        for &c in self.terms.values() {
            total = checked_add(total, c)?;
        }
        if total < 0 {
            return Err(Error::Internal(
                "virtual character has negative dimension".into(),
            ));
        }
        Ok(BigUint::from(total as u128))
    }
}

struct SchurWalker {
    cap: Vec<i32>,
    required: Vec<Vec<i32>>,
    out: CharPoly,
}

impl SchurWalker {
    fn fill_value(&mut self, v: usize, shape: &mut Vec<i32>, content: &mut Vec<u16>) -> Result<()> {
        let nvars = self.cap.len();
        if v == nvars {
            return self.out.add_term(content.clone(), 1);
        }
        let old = shape.clone();
        self.strip_rows(0, 0, v, &old, shape, content)
    }

    fn strip_rows(
        &mut self,
        row: usize,
        added: u16,
        v: usize,
        old: &[i32],
        shape: &mut Vec<i32>,
        content: &mut Vec<u16>,
    ) -> Result<()> {
        let nvars = self.cap.len();
        if row == nvars {
            if (0..nvars).all(|i| shape[i] >= self.required[v][i]) {
                content[v] = added;
                self.fill_value(v + 1, shape, content)?;
                content[v] = 0;
            }
            return Ok(());
        }
        let mut hi = self.cap[row] - old[row];
        if row > 0 {
            hi = hi.min(old[row - 1] - old[row]);
        }
        for m in 0..=hi {
            shape[row] = old[row] + m;
            self.strip_rows(row + 1, added + m as u16, v, old, shape, content)?;
        }
        shape[row] = old[row];
        Ok(())
    }
}
