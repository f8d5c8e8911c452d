//! Command results. Everything a command computes lands in a [`Report`],
//! which renders as text or as JSON that deserializes back to an equal
//! value.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Integers go out as JSON numbers when they fit in an `i64` and as
/// decimal strings otherwise; both forms are accepted on input.
pub mod bigint_json {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(i64),
        Big(String),
    }

    fn to_repr(x: &BigInt) -> Repr {
        i64::try_from(x).map(Repr::Small).unwrap_or_else(|_| Repr::Big(x.to_string()))
    }

    fn from_repr<E: serde::de::Error>(r: Repr) -> Result<BigInt, E> {
        match r {
            Repr::Small(i) => Ok(i.into()),
            Repr::Big(s) => s.parse().map_err(|_| E::custom(format!("`{s}` is not an integer"))),
        }
    }

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_repr(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_repr(Repr::deserialize(d)?)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            v.iter().map(to_repr).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Vec::<Repr>::deserialize(d)?.into_iter().map(from_repr).collect()
        }
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            v.as_ref().map(to_repr).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
            Option::<Repr>::deserialize(d)?.map(from_repr).transpose()
        }
    }

    pub mod option_vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
            v.as_ref().map(|v| v.iter().map(to_repr).collect::<Vec<_>>()).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<BigInt>>, D::Error> {
            Option::<Vec<Repr>>::deserialize(d)?.map(|v| v.into_iter().map(from_repr).collect()).transpose()
        }
    }

    pub mod option_map {
        use std::collections::BTreeMap;

        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BTreeMap<String, BigInt>>, s: S) -> Result<S::Ok, S::Error> {
            v.as_ref().map(|m| m.iter().map(|(k, x)| (k.clone(), to_repr(x))).collect::<BTreeMap<_, _>>()).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BTreeMap<String, BigInt>>, D::Error> {
            Option::<BTreeMap<String, Repr>>::deserialize(d)?
                .map(|m| m.into_iter().map(|(k, r)| Ok((k, from_repr(r)?))).collect())
                .transpose()
        }
    }

}

/// One row of the `verify` table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub quantity: String,
    pub formula: String,
    pub oracle: String,
    pub pass: bool,
}

impl Check {
    pub fn compare<T: PartialEq + std::fmt::Debug>(quantity: impl Into<String>, formula: T, oracle: T) -> Check {
        let pass = formula == oracle;
        Check { quantity: quantity.into(), formula: show(&formula), oracle: show(&oracle), pass }
    }
}

/// `[1, 2]` → `1 2`; plain values pass through `Debug`.
fn show<T: std::fmt::Debug>(x: &T) -> String {
    let s = format!("{x:?}");
    s.trim_start_matches('[').trim_end_matches(']').replace(", ", " ").replace('"', "")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatSummary {
    pub id: String,
    pub rank: usize,
    pub dim: usize,
    #[serde(with = "bigint_json::vec")]
    pub poin_c: Vec<BigInt>,
    #[serde(with = "bigint_json")]
    pub kappa: BigInt,
    /// `μ(X, Y)`.
    #[serde(with = "bigint_json")]
    pub mu: BigInt,
    pub covers: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ambient_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub asserted_cellular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub simple: Option<bool>,
    /// Number of flats of each dimension.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub census: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "bigint_json::option_vec")]
    pub char_poly: Option<Vec<BigInt>>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "bigint_json::option")]
    pub chambers: Option<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "bigint_json::option_vec")]
    pub f_vector: Option<Vec<BigInt>>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "bigint_json::option_map")]
    pub fibers: Option<BTreeMap<String, BigInt>>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "bigint_json::option_vec")]
    pub closed_form: Option<Vec<BigInt>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub flats: Option<Vec<FlatSummary>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verification: Option<Vec<Check>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Report {
    /// False iff some verification row failed.
    pub fn verified(&self) -> bool {
        self.verification.iter().flatten().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let ints = |v: &[BigInt]| v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(" ");
        if let Some(s) = &self.source {
            let _ = writeln!(out, "{s}");
        }
        if let (Some(fam), Some(l)) = (&self.family, self.ambient_dim) {
            let _ = writeln!(out, "family: {fam}, dimension {l}");
        }
        if let Some(c) = &self.census {
            let _ = writeln!(out, "flats by dimension: {}", c.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
        }
        if let Some(s) = self.simple {
            let _ = writeln!(out, "simple: {}", if s { "yes" } else { "no" });
        }
        if self.asserted_cellular == Some(true) {
            let _ = writeln!(out, "cellularity: asserted, not checked");
        }
        // a lone value prints bare so scripts can read it directly
        let values = [self.char_poly.is_some(), self.chambers.is_some(), self.f_vector.is_some(), self.closed_form.is_some()];
        let label = |name: &str| if values.iter().filter(|&&v| v).count() > 1 { format!("{name}: ") } else { String::new() };
        if let Some(p) = &self.char_poly {
            let poly = dissect_core::exactmath::IntPolynomial::new(p.clone());
            let _ = writeln!(out, "{}{poly}", label("characteristic polynomial"));
        }
        if let Some(c) = &self.chambers {
            let _ = writeln!(out, "{}{c}", label("chambers"));
        }
        if let Some(f) = &self.f_vector {
            let _ = writeln!(out, "{}{}", label("f-vector"), ints(f));
        }
        if let Some(f) = &self.closed_form {
            let _ = writeln!(out, "{}{}", label("closed form"), ints(f));
        }
        for (chain, n) in self.fibers.iter().flatten() {
            let _ = writeln!(out, "{chain}: {n}");
        }
        for f in self.flats.iter().flatten() {
            let _ = writeln!(
                out,
                "rank {}: {} (dim {}, kappa {}, mu {}) covers: {}",
                f.rank,
                f.id,
                f.dim,
                f.kappa,
                f.mu,
                if f.covers.is_empty() { "-".to_string() } else { f.covers.join(", ") }
            );
        }
        if let Some(rows) = &self.verification {
            let w = rows.iter().map(|r| r.quantity.len()).max().unwrap_or(0);
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:<w$}  {:>14}  {:>14}  {}",
                    r.quantity,
                    r.formula,
                    r.oracle,
                    if r.pass { "PASS" } else { "FAIL" }
                );
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        let r = Report {
            char_poly: Some(vec![4.into(), (-1).into(), 1.into()]),
            chambers: Some(huge.clone()),
            f_vector: Some(vec![3.into(), 9.into(), 6.into()]),
            fibers: Some([("X,N1".to_string(), BigInt::from(6))].into()),
            verification: Some(vec![Check::compare("chambers", 6, 6)]),
            ..Report::default()
        };
        let json = r.to_json();
        assert!(json.contains("\"123456789012345678901234567890\""));
        assert!(json.contains("\"char_poly\": [\n    4,"));
        assert_eq!(Report::from_json(&json).unwrap(), r);
    }

    #[test]
    fn checks_render_compactly() {
        let c = Check::compare("f_vector", vec![1, 4, 4], vec![1, 4, 4]);
        assert_eq!(c.formula, "1 4 4");
        assert!(c.pass);
        assert!(!Check::compare("chambers", 6, 5).pass);
    }
}
