//! Serde helpers writing big integers as decimal strings.

use std::fmt::Display;

use serde::ser::SerializeSeq;
use serde::Serializer;

pub(crate) fn one<S: Serializer, T: Display>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub(crate) fn many<S: Serializer, T: Display>(values: &[T], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.to_string())?;
    }
    seq.end()
}
