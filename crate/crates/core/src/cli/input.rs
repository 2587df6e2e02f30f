//! Input documents.
//!
//! A chain is given as
//!
//! ```json
//! { "m": 2, "n": 1,
//!   "field": { "d": 2, "params": [], "h": "1" },
//!   "weights": [[1, 1, 0], [1, 1, 0], [1, 1, 0]],
//!   "z": ["0", "r", "-r"],
//!   "twist": null, "parity": [1, 1, -1], "y": ["1", "1"] }
//! ```
//!
//! `field`, `twist`, `parity` and `y` are optional; the node defaults to `y = (1, …, 1)` with
//! the standard parity. A `gl(1|1)` chain is `{ "field": {"d": -3}, "weights": [["1", "0"]], "z": ["0"] }`.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::parse::FieldSpec;
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::gl11::Gl11Weights;
use crate::model::{BetheNode, ParitySeq, WeightData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDoc {
    pub m: usize,
    pub n: usize,
    #[serde(default)]
    pub field: FieldSpec,
    pub weights: Vec<Vec<u32>>,
    pub z: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<Vec<i8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Gl11Doc {
    #[serde(default)]
    pub field: FieldSpec,
    /// `(a_k, b_k)` per site.
    pub weights: Vec<[String; 2]>,
    pub z: Vec<String>,
}

/// Reads `src` as a path, or as inline JSON when it starts with `{`. Schema errors carry the
/// JSON path of the offending value.
pub fn load<T: DeserializeOwned>(src: &str) -> Result<T> {
    let text = if src.trim_start().starts_with('{') {
        src.to_string()
    } else {
        std::fs::read_to_string(src).map_err(|e| Error::Invalid(format!("{src}: {e}")))?
    };
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Parse(format!("at {path}: {inner}"))
    })
}

impl InputDoc {
    pub fn weight_data<F: Field>(&self) -> Result<WeightData<F>> {
        self.field.validate()?;
        let z = self.z.iter().map(|s| self.field.parse(s)).collect::<Result<Vec<F>>>()?;
        let twist = match &self.twist {
            Some(t) => Some(t.iter().map(|s| self.field.parse(s)).collect::<Result<Vec<F>>>()?),
            None => None,
        };
        WeightData::new(self.m, self.n, self.weights.clone(), z, twist, self.field.step()?)
    }

    /// The node named by `parity` and `y`.
    pub fn node<F: Field>(&self, w: &WeightData<F>) -> Result<BetheNode<F>> {
        let parity = match &self.parity {
            Some(p) => ParitySeq::new(p.clone())?,
            None => w.standard_parity(),
        };
        if parity.m() != self.m || parity.n() != self.n {
            return Err(Error::Invalid(format!("parity {parity} is not in S_{}|{}", self.m, self.n)));
        }
        match &self.y {
            Some(ys) => {
                let y = ys.iter().map(|s| self.field.parse_poly(s)).collect::<Result<Vec<_>>>()?;
                BetheNode::new(parity, y, w.twist.clone())
            }
            None => Ok(BetheNode::trivial(parity, w.twist.clone())),
        }
    }
}

impl Gl11Doc {
    pub fn weights<F: Field>(&self) -> Result<Gl11Weights<F>> {
        self.field.validate()?;
        if !self.field.params.is_empty() {
            return Err(Error::InvalidField("gl(1|1) data takes no parameters".into()));
        }
        if self.field.h != "1" {
            return Err(Error::InvalidField("gl(1|1) chains use h = 1".into()));
        }
        let p = |s: &String| self.field.parse::<F>(s);
        let a = self.weights.iter().map(|w| p(&w[0])).collect::<Result<Vec<_>>>()?;
        let b = self.weights.iter().map(|w| p(&w[1])).collect::<Result<Vec<_>>>()?;
        let z = self.z.iter().map(p).collect::<Result<Vec<_>>>()?;
        Gl11Weights::new(a, b, z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quad;

    const WORKED: &str = r#"{"m":2,"n":1,"field":{"d":2},"weights":[[1,1,0],[1,1,0],[1,1,0]],"z":["0","r","-r"]}"#;

    #[test]
    fn inline_document() {
        let d: InputDoc = load(WORKED).unwrap();
        let w = d.weight_data::<Quad>().unwrap();
        assert_eq!(w.z[1], Quad::sqrt_of(2));
        assert_eq!(d.node(&w).unwrap(), BetheNode::trivial(ParitySeq::standard(2, 1), None));
    }

    #[test]
    fn unknown_field_is_rejected() {
        let e = load::<InputDoc>(r#"{"m":1,"n":1,"weights":[[1,0]],"z":["0"],"colour":3}"#).unwrap_err();
        assert!(e.is_input_error());
        let e = load::<InputDoc>(r#"{"m":1,"n":1,"field":{"dd":2},"weights":[[1,0]],"z":["0"]}"#).unwrap_err();
        assert!(e.to_string().contains("field"), "{e}");
    }

    #[test]
    fn missing_weights() {
        let e = load::<InputDoc>(r#"{"m":1,"n":1,"z":["0"]}"#).unwrap_err();
        assert!(e.is_input_error() && e.to_string().contains("weights"), "{e}");
    }

    #[test]
    fn wrong_type_is_pointered() {
        let e = load::<InputDoc>(r#"{"m":1,"n":1,"weights":[[1,"a"]],"z":["0"]}"#).unwrap_err();
        assert!(e.to_string().contains("weights[0][1]"), "{e}");
    }

    #[test]
    fn round_trip() {
        let d: InputDoc = load(WORKED).unwrap();
        let again: InputDoc = load(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(d, again);
    }
}
