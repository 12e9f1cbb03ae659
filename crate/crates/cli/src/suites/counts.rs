use std::collections::BTreeSet;

use num_bigint::BigUint;
use skein_core::dimensions::{db_count_formula, k_dimension, SurfaceDescriptor};
use skein_core::oq_sl2::{b_set, count_d, d_set, in_d};

use super::Params;
use crate::runner::{ensure, Check};

pub fn checks(p: &Params) -> Vec<Check> {
    let n = p.n;
    vec![
        Check::new("spanning-set-count", move |_| {
            let box_d: BTreeSet<_> = d_set(n).into_iter().collect();
            let extra: BTreeSet<_> = b_set(n).into_iter().collect();
            ensure(box_d.is_disjoint(&extra), || "D and B overlap".into())?;
            let enumerated = box_d.len() + extra.len();
            let formula = db_count_formula(n)?;
            ensure(formula == BigUint::from(enumerated), || format!("formula {formula} vs enumeration {enumerated}"))?;
            Ok(format!("formula {formula} = enumeration {enumerated}"))
        }),
        Check::new("box-count", move |_| {
            let cube = (n as usize).pow(3);
            ensure(count_d(n) == cube, || format!("|D| = {}", count_d(n)))?;
            ensure(d_set(n).iter().all(|k| in_d(*k, n)), || "D contains a stray index".into())?;
            Ok(format!("|D| = {cube} = N^3"))
        }),
        Check::new("bigon-dimension", move |_| {
            let k = k_dimension(&SurfaceDescriptor::bigon(), n)?;
            ensure(k == BigUint::from(count_d(n)), || format!("K = {k}"))?;
            Ok(format!("K(bigon) = {k} = |D|"))
        }),
    ]
}
