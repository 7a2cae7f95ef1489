//! Serde helpers. Exact integers render as decimal strings and rationals as
//! `{"num", "den"}` pairs so that JSON consumers never see a rounded value.

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::Serializer;

pub(crate) fn biguint_str<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn bigint_str<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `{"num": "27", "den": "4"}`, in lowest terms (denominator 1 included).
pub(crate) fn ratio_obj<S: Serializer>(v: &Ratio<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Ratio", 2)?;
    st.serialize_field("num", &v.numer().to_string())?;
    st.serialize_field("den", &v.denom().to_string())?;
    st.end()
}
