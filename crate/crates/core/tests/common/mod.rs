#![allow(dead_code)]

use std::time::{Duration, Instant};

use ellsurf_core::lattice::reflect;
use ellsurf_core::matrix::ints;
use ellsurf_core::{IntVector, Isometry, Lattice};
use num_bigint::BigInt;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::Rng;

/// Vectors `v` with `v² ∈ {±1, ±2}` built from basis vectors, sums and
/// differences of pairs. Every one of them gives an integral reflection.
pub fn admissible_pool(l: &Lattice) -> Vec<IntVector> {
    let n = l.rank();
    let unit = |i: usize| {
        let mut v = vec![BigInt::from(0); n];
        v[i] = BigInt::from(1);
        v
    };
    let mut pool = Vec::new();
    let ok = |v: &IntVector| {
        let s = l.norm(v).unwrap();
        s.abs() == BigInt::from(1) || s.abs() == BigInt::from(2)
    };
    for i in 0..n {
        let v = unit(i);
        if ok(&v) {
            pool.push(v);
        }
        for j in i + 1..n {
            for sign in [1i64, -1] {
                let v: IntVector = unit(i).iter().zip(unit(j)).map(|(a, b)| a + b * sign).collect();
                if ok(&v) {
                    pool.push(v);
                }
            }
        }
    }
    pool
}

/// Product of `len` reflections drawn from `pool`, together with the
/// product of `sign(−v²)` over the factors.
pub fn random_reflection_product(l: &Lattice, pool: &[IntVector], len: usize, rng: &mut StdRng) -> (Isometry, i8) {
    let mut g = Isometry::identity(l.rank());
    let mut theta = 1i8;
    for _ in 0..len {
        let v = &pool[rng.gen_range(0..pool.len())];
        if l.norm(v).unwrap().is_positive() {
            theta = -theta;
        }
        g = g.compose(&reflect(l, v).unwrap());
    }
    (g, theta)
}

pub fn odd_unimodular(b_plus: usize, b_minus: usize) -> Lattice {
    let mut d = vec![1i64; b_plus];
    d.extend(std::iter::repeat_n(-1, b_minus));
    Lattice::diagonal(&d)
}

pub fn v(xs: &[i64]) -> IntVector {
    ints(xs)
}

/// Prints the single status line of a criterion and returns its verdict.
pub fn report(id: u32, title: &str, started: Instant, limit: Duration, failures: &[String]) -> bool {
    let elapsed = started.elapsed();
    let in_time = elapsed <= limit;
    let pass = failures.is_empty() && in_time;
    let mut detail = String::new();
    if !in_time {
        detail.push_str(&format!("; runtime {:.2?} exceeds {:.0?}", elapsed, limit));
    }
    for f in failures {
        detail.push_str("; ");
        detail.push_str(f);
    }
    println!(
        "criterion {id:>2} {}: {title} ({:.2?}){detail}",
        if pass { "PASS" } else { "FAIL" },
        elapsed
    );
    pass
}
