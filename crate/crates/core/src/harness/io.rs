//! JSON forms: `{"algebra": "<descriptor>", "coords": [..]}` for elements and
//! `{"e": {..}, "x": {..}}` for boundary points.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_descriptor, Element};
use crate::error::{Error, Result};
use crate::wiener_hopf::BoundaryPoint;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub algebra: String,
    pub coords: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryJson {
    pub e: ElementJson,
    pub x: ElementJson,
}

impl From<&Element> for ElementJson {
    fn from(x: &Element) -> Self {
        Self { algebra: x.algebra().to_string(), coords: x.coords().iter().copied().collect() }
    }
}

impl From<&BoundaryPoint> for BoundaryJson {
    fn from(p: &BoundaryPoint) -> Self {
        Self { e: p.e().into(), x: p.x().into() }
    }
}

impl ElementJson {
    pub fn to_element(&self) -> Result<Element> {
        Element::new(Arc::new(parse_descriptor(&self.algebra)?), self.coords.clone())
    }
}

impl BoundaryJson {
    pub fn to_boundary(&self) -> Result<BoundaryPoint> {
        let e = self.e.to_element()?;
        let x = self.x.to_element()?;
        BoundaryPoint::new(e, x)
    }
}

fn json_error(err: serde_json::Error) -> Error {
    Error::Parse { position: err.column(), message: err.to_string() }
}

pub fn element_from_json(text: &str) -> Result<Element> {
    serde_json::from_str::<ElementJson>(text).map_err(json_error)?.to_element()
}

pub fn boundary_from_json(text: &str) -> Result<BoundaryPoint> {
    serde_json::from_str::<BoundaryJson>(text).map_err(json_error)?.to_boundary()
}

pub fn element_to_json(x: &Element) -> String {
    serde_json::to_string(&ElementJson::from(x)).expect("plain data")
}

pub fn boundary_to_json(p: &BoundaryPoint) -> String {
    serde_json::to_string(&BoundaryJson::from(p)).expect("plain data")
}
