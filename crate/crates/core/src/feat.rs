//! Small helpers for d-dimensional embedding vectors stored as slices.

/// Norm below which a vector is treated as "no content" and left zero.
pub const DEGENERATE_NORM: f64 = 1e-6;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Normalize in place; vectors with norm <= `DEGENERATE_NORM` become zero.
/// Returns the original norm.
pub fn renormalize(a: &mut [f64]) -> f64 {
    let n = norm(a);
    if n <= DEGENERATE_NORM {
        a.fill(0.0);
    } else {
        for x in a.iter_mut() {
            *x /= n;
        }
    }
    n
}

/// Cosine similarity; 0 if either vector is degenerate.
pub fn cosine(a: &[f64], b: &[f64]) -> f64 {
    let (na, nb) = (norm(a), norm(b));
    if na <= DEGENERATE_NORM || nb <= DEGENERATE_NORM {
        0.0
    } else {
        dot(a, b) / (na * nb)
    }
}

/// Draw a unit vector uniformly from the sphere in `dim` dimensions.
pub fn random_unit(dim: usize, rng: &mut impl rand::Rng) -> Vec<f64> {
    use rand_distr::{Distribution, StandardNormal};
    loop {
        let mut v: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
        if renormalize(&mut v) > 1e-3 {
            return v;
        }
    }
}

/// A unit vector orthogonal to `v`, chosen deterministically from `rng`.
pub fn random_orthogonal(v: &[f64], rng: &mut impl rand::Rng) -> Vec<f64> {
    loop {
        let mut p = random_unit(v.len(), rng);
        let proj = dot(&p, v);
        for (pi, vi) in p.iter_mut().zip(v) {
            *pi -= proj * vi;
        }
        if renormalize(&mut p) > 1e-3 {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn renormalize_unit() {
        let mut v = vec![3.0, 4.0];
        renormalize(&mut v);
        assert!((norm(&v) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_goes_zero() {
        let mut v = vec![1e-9, -1e-9, 0.0];
        renormalize(&mut v);
        assert_eq!(v, vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn orthogonal_is_orthogonal() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let v = random_unit(8, &mut rng);
        let p = random_orthogonal(&v, &mut rng);
        assert!(dot(&v, &p).abs() < 1e-9);
        assert!((norm(&p) - 1.0).abs() < 1e-9);
    }
}
