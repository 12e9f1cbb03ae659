use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::Number;
use skein_core::dimensions::{
    k_dimension, lambda_bounds, module_bound, r_of_surface, Marked3ManifoldDescriptor, SurfaceDescriptor,
};
use skein_core::Result;

use crate::DimsCommand;

#[derive(Debug, Serialize)]
pub struct SurfaceDims {
    pub r: i64,
    #[serde(rename = "K")]
    pub k: Number,
    pub lambda_lower: Number,
    pub lambda_upper: Number,
}

#[derive(Debug, Serialize)]
pub struct ManifoldDims {
    pub bound: Number,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Dims {
    Surface(SurfaceDims),
    Manifold(ManifoldDims),
}

/// Exact JSON integer, however many digits.
fn number(x: &BigUint) -> Number {
    Number::from_str(&x.to_string()).expect("decimal integers are valid JSON numbers")
}

pub fn run(cmd: &DimsCommand) -> Result<Dims> {
    match *cmd {
        DimsCommand::Surface {
            genus,
            punctures,
            boundary,
            boundary_circles,
            n,
        } => {
            let s = match boundary_circles {
                Some(h) => SurfaceDescriptor::with_boundary_circles(genus, punctures, boundary, h)?,
                None => SurfaceDescriptor::new(genus, punctures, boundary),
            };
            let k = k_dimension(&s, n)?;
            let (lo, hi) = lambda_bounds(&s, n)?;
            Ok(Dims::Surface(SurfaceDims {
                r: r_of_surface(&s),
                k: number(&k),
                lambda_lower: number(&lo),
                lambda_upper: number(&hi),
            }))
        }
        DimsCommand::Manifold { genus, markings, n } => {
            let bound = module_bound(&Marked3ManifoldDescriptor { genus, markings }, n)?;
            Ok(Dims::Manifold(ManifoldDims { bound: number(&bound) }))
        }
    }
}
