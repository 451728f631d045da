//! Serde adapters writing big numbers as decimal strings.

use serde::{Deserialize, Deserializer, Serializer};

use crate::arith::{format_rational, parse_integer, parse_rational, Integer, Rational};

pub fn int<S: Serializer>(x: &Integer, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn de_int<'de, D: Deserializer<'de>>(d: D) -> Result<Integer, D::Error> {
    let text = String::deserialize(d)?;
    parse_integer(&text).map_err(serde::de::Error::custom)
}

pub fn rational<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

pub fn de_rational<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let text = String::deserialize(d)?;
    parse_rational(&text).map_err(serde::de::Error::custom)
}

pub fn ints<S: Serializer>(xs: &[Integer], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

pub fn rationals<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(format_rational))
}

pub fn de_rationals<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
    Vec::<String>::deserialize(d)?
        .iter()
        .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
        .collect()
}
