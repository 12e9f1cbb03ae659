//! Closed-form dimension counts and bounds, in exact big integers.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest exponent materialized by the calculators.
pub const MAX_EXPONENT: u64 = 1 << 24;

/// A punctured bordered surface: genus `g`, `p` interior punctures and `b`
/// boundary intervals lying on `h` boundary circles of the compact model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceDescriptor {
    pub genus: u32,
    pub punctures: u32,
    pub boundary: u32,
    pub boundary_circles: u32,
}

impl SurfaceDescriptor {
    /// Boundary intervals on a single circle when `boundary > 0`.
    pub fn new(genus: u32, punctures: u32, boundary: u32) -> Self {
        SurfaceDescriptor {
            genus,
            punctures,
            boundary,
            boundary_circles: u32::from(boundary > 0),
        }
    }

    pub fn with_boundary_circles(genus: u32, punctures: u32, boundary: u32, circles: u32) -> Result<Self> {
        let s = SurfaceDescriptor {
            genus,
            punctures,
            boundary,
            boundary_circles: circles,
        };
        if (boundary == 0) != (circles == 0) || circles > boundary {
            return Err(Error::UnsupportedDescriptor(format!(
                "{boundary} boundary intervals cannot lie on {circles} circles"
            )));
        }
        Ok(s)
    }

    /// The bigon: a disk with two boundary punctures.
    pub fn bigon() -> Self {
        Self::new(0, 0, 2)
    }

    /// A closed surface of genus `g` with `p` punctures.
    pub fn closed(genus: u32, punctures: u32) -> Self {
        Self::new(genus, punctures, 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_circles as i64 - self.punctures as i64
    }
}

/// A compact 3-manifold of Heegaard genus `g` with `k` marking components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Marked3ManifoldDescriptor {
    pub genus: u32,
    pub markings: u32,
}

fn check_order(n: u32) -> Result<()> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::InvalidOrder(n as i64));
    }
    Ok(())
}

fn power(base: &BigUint, exp: u64) -> Result<BigUint> {
    if exp > MAX_EXPONENT {
        return Err(Error::CountTooLarge(exp.to_string()));
    }
    Ok(base.pow(exp as u32))
}

/// `2^e - 1` as an exponent, refusing values beyond [`MAX_EXPONENT`].
fn mersenne(e: u64) -> Result<u64> {
    if e >= 25 {
        return Err(Error::CountTooLarge(format!("2^{e} - 1")));
    }
    Ok((1u64 << e) - 1)
}

pub fn r_of_surface(s: &SurfaceDescriptor) -> i64 {
    -s.euler_characteristic() + s.boundary as i64
}

fn validate(s: &SurfaceDescriptor) -> Result<()> {
    if (s.boundary == 0) != (s.boundary_circles == 0) || s.boundary_circles > s.boundary {
        return Err(Error::UnsupportedDescriptor(format!("{s:?}")));
    }
    if s.boundary == 0 && s.euler_characteristic() >= 0 {
        return Err(Error::UnsupportedDescriptor(format!(
            "closed surface needs negative Euler characteristic, got {}",
            s.euler_characteristic()
        )));
    }
    Ok(())
}

/// `N^{3 r}`.
pub fn k_dimension(s: &SurfaceDescriptor, n: u32) -> Result<BigUint> {
    check_order(n)?;
    validate(s)?;
    let r = r_of_surface(s);
    power(&BigUint::from(n), 3 * r as u64)
}

/// `2N^3 - N(N+1)(2N+1)/6`.
pub fn db_count_formula(n: u32) -> Result<BigUint> {
    check_order(n)?;
    let n = BigUint::from(n);
    let one = BigUint::from(1u32);
    let two = BigUint::from(2u32);
    let squares = &n * (&n + &one) * (&two * &n + &one) / BigUint::from(6u32);
    Ok(&two * n.pow(3) - squares)
}

/// Lower and upper bounds on the dimension over the Frobenius image.
pub fn lambda_bounds(s: &SurfaceDescriptor, n: u32) -> Result<(BigUint, BigUint)> {
    check_order(n)?;
    validate(s)?;
    let base = BigUint::from(n);
    let (g, p) = (s.genus as u64, s.punctures as u64);
    if s.boundary > 0 {
        let r = r_of_surface(s) as u64;
        return Ok((power(&base, 3 * r)?, power(&db_count_formula(n)?, r)?));
    }
    if p >= 1 {
        return Ok((power(&base, 6 * g + 3 * p - 6)?, power(&base, mersenne(2 * g + p - 1)?)?));
    }
    if g >= 2 {
        return Ok((power(&base, 6 * g - 6)?, power(&base, mersenne(2 * g)?)?));
    }
    Err(Error::UnsupportedDescriptor(format!("{s:?}")))
}

/// Upper bound on the skein module over the Frobenius image.
pub fn module_bound(m: &Marked3ManifoldDescriptor, n: u32) -> Result<BigUint> {
    check_order(n)?;
    let g = m.genus as u64;
    if m.markings == 0 {
        power(&BigUint::from(n), mersenne(g)?)
    } else {
        power(&db_count_formula(n)?, 2 * g + m.markings as u64 - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn r_values() {
        assert_eq!(r_of_surface(&SurfaceDescriptor::bigon()), 1);
        assert_eq!(r_of_surface(&SurfaceDescriptor::closed(1, 1)), 1);
        assert_eq!(r_of_surface(&SurfaceDescriptor::closed(0, 3)), 1);
    }

    #[test]
    fn dimensions() {
        assert_eq!(k_dimension(&SurfaceDescriptor::bigon(), 3).unwrap(), big(27));
        assert_eq!(k_dimension(&SurfaceDescriptor::closed(1, 1), 3).unwrap(), big(27));
        assert_eq!(k_dimension(&SurfaceDescriptor::closed(0, 3), 3).unwrap(), big(27));
        assert!(k_dimension(&SurfaceDescriptor::bigon(), 4).is_err());
        assert!(k_dimension(&SurfaceDescriptor::closed(1, 0), 3).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(lambda_bounds(&SurfaceDescriptor::bigon(), 3).unwrap(), (big(27), big(40)));
        assert_eq!(lambda_bounds(&SurfaceDescriptor::closed(1, 1), 3).unwrap(), (big(27), big(27)));
        assert_eq!(lambda_bounds(&SurfaceDescriptor::closed(1, 2), 3).unwrap(), (big(3u64.pow(6)), big(3u64.pow(7))));
        assert!(lambda_bounds(&SurfaceDescriptor::closed(1, 0), 3).is_err());
        assert_eq!(lambda_bounds(&SurfaceDescriptor::closed(2, 0), 3).unwrap(), (big(729), big(3u64.pow(15))));
    }

    #[test]
    fn manifold_bounds() {
        let m = |genus, markings| Marked3ManifoldDescriptor { genus, markings };
        assert_eq!(module_bound(&m(0, 0), 3).unwrap(), big(1));
        assert_eq!(module_bound(&m(2, 0), 3).unwrap(), big(27));
        assert_eq!(module_bound(&m(0, 1), 3).unwrap(), big(1));
        assert_eq!(module_bound(&m(0, 2), 3).unwrap(), big(40));
        assert_eq!(module_bound(&m(1, 1), 3).unwrap(), big(1600));
        assert!(matches!(module_bound(&m(40, 0), 3), Err(Error::CountTooLarge(_))));
    }

    #[test]
    fn formula_values() {
        assert_eq!(db_count_formula(1).unwrap(), big(1));
        assert_eq!(db_count_formula(3).unwrap(), big(40));
        assert_eq!(db_count_formula(5).unwrap(), big(195));
    }

    #[test]
    fn descriptor_validation() {
        assert!(SurfaceDescriptor::with_boundary_circles(0, 0, 2, 2).is_ok());
        assert!(SurfaceDescriptor::with_boundary_circles(0, 0, 2, 3).is_err());
        assert!(SurfaceDescriptor::with_boundary_circles(0, 0, 0, 1).is_err());
        let annulus = SurfaceDescriptor::with_boundary_circles(0, 0, 2, 2).unwrap();
        assert_eq!(r_of_surface(&annulus), 2);
    }
}
