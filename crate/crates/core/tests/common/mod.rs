//! Generators and brute-force oracles shared by the integration tests. The
//! oracles deliberately avoid the library's series arithmetic.

#![allow(dead_code)]

use motivic_zeta::{IntSeries, LefschetzPoly};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

/// Random class with degree at most `max_deg` and coefficients in
/// `[-max_abs, max_abs]`.
pub fn poly_strategy(max_deg: usize, max_abs: i64) -> impl Strategy<Value = LefschetzPoly> {
    prop::collection::vec(-max_abs..=max_abs, 0..=max_deg + 1).prop_map(LefschetzPoly::from_dense)
}

pub fn effective_poly_strategy(max_deg: usize, max_abs: i64) -> impl Strategy<Value = LefschetzPoly> {
    prop::collection::vec(0..=max_abs, 0..=max_deg + 1).prop_map(LefschetzPoly::from_dense)
}

/// Integer series `1 + c_1 t + ... + c_N t^N`.
pub fn unit_series_strategy(precision: usize, max_abs: i64) -> impl Strategy<Value = IntSeries> {
    prop::collection::vec(-max_abs..=max_abs, precision).prop_map(move |tail| {
        let mut coeffs = vec![1i64];
        coeffs.extend(tail);
        IntSeries::from_ints(coeffs, precision)
    })
}

pub fn random_poly<R: Rng>(rng: &mut R, max_deg: usize, max_abs: i64) -> LefschetzPoly {
    let len = rng.gen_range(0..=max_deg + 1);
    LefschetzPoly::from_dense((0..len).map(|_| rng.gen_range(-max_abs..=max_abs)))
}

pub fn random_unit_series<R: Rng>(rng: &mut R, precision: usize, max_abs: i64) -> IntSeries {
    let coeffs = std::iter::once(1)
        .chain((0..precision).map(|_| rng.gen_range(-max_abs..=max_abs)))
        .collect::<Vec<i64>>();
    IntSeries::from_ints(coeffs, precision)
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Naive truncated product of dense integer coefficient lists.
pub fn convolve(a: &[BigInt], b: &[BigInt], precision: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); precision + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j <= precision {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Partitions of `n` counted by explicit enumeration of non-increasing part
/// sequences.
pub fn partitions_by_enumeration(n: u32) -> u64 {
    fn count(remaining: u32, max_part: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        (1..=max_part.min(remaining))
            .map(|part| count(remaining - part, part))
            .sum()
    }
    count(n, n)
}

/// `[Sym^n X]` for a class with non-negative coefficients, by enumerating
/// multisets of size `n` drawn from its cells (`a_m` copies of `L^m`).
pub fn sym_by_multisets(c: &LefschetzPoly, n: usize) -> LefschetzPoly {
    let cells: Vec<u32> = c
        .terms()
        .flat_map(|(m, a)| {
            let copies: usize = a.try_into().expect("non-negative coefficient");
            std::iter::repeat_n(m, copies)
        })
        .collect();
    let mut acc = LefschetzPoly::zero();
    let mut stack: Vec<(usize, usize, u32)> = vec![(0, 0, 0)];
    // (next cell index allowed, chosen so far, exponent sum)
    while let Some((start, chosen, exp)) = stack.pop() {
        if chosen == n {
            acc = acc + LefschetzPoly::affine(exp);
            continue;
        }
        for (i, &m) in cells.iter().enumerate().skip(start) {
            stack.push((i, chosen + 1, exp + m));
        }
    }
    acc
}

/// CLI invocations whose TEXT or JSON output is frozen under `tests/golden`.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("zeta_mot_pt", &["zeta", "mot", "pt", "--order", "3"]),
    ("zeta_cat_zero", &["zeta", "cat", "0"]),
    ("zeta_cat_pt", &["zeta", "cat", "pt", "--order", "5"]),
    ("zeta_mot_p1", &["zeta", "mot", "P^1", "--order", "4"]),
    ("zeta_mot_virtual", &["zeta", "mot", "-L + L^3", "--order", "3"]),
    ("zeta_cat_p2", &["zeta", "cat", "P^2", "--order", "8"]),
    ("zeta_cat_negative", &["zeta", "cat", "L^2 - 2*L", "--order", "6"]),
    ("sym_p1", &["sym", "2", "P^1"]),
    ("sym_p2", &["sym", "3", "P^2"]),
    ("lambda_pt", &["lambda", "2", "pt"]),
    ("lambda_quadric", &["lambda", "3", "P^1 * P^1"]),
    ("adams_line", &["adams", "3", "L"]),
    ("adams_virtual", &["adams", "2", "-2*L^3 + L"]),
    ("measure_p3", &["measure", "P^3"]),
    ("measure_a5", &["measure", "A^5"]),
    ("measure_zero", &["measure", "L - 1"]),
    ("transform_exp", &["transform", "exp", "--coeffs", "1,1,1,1,1"]),
    ("transform_mobius_trivial", &["transform", "mobius", "--coeffs", "1,0,0,0"]),
    ("transform_mobius", &["transform", "mobius", "--coeffs", "1,1,2,3,5"]),
    ("transform_from_zeta", &["transform", "exp", "--from-zeta", "P^1", "--order", "6"]),
    ("verify_theorem", &["verify", "theorem", "P^2", "--order", "16"]),
    (
        "verify_theorem_geometric",
        &["verify", "theorem", "P^1", "--structure", "geometric", "--order", "6"],
    ),
    ("verify_mult", &["verify", "mult", "pt", "A^1", "--order", "12"]),
    ("verify_ppower", &["verify", "ppower", "P^1", "3", "--order", "12"]),
    ("verify_point", &["verify", "point", "--order", "64"]),
    ("json_zeta_mot", &["zeta", "mot", "P^1", "--order", "2", "--json"]),
    (
        "json_verify_failed",
        &["verify", "theorem", "pt", "--structure", "geometric", "--order", "4", "--json"],
    ),
];

pub fn golden_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the `zetacalc` binary built for this test target.
pub fn zetacalc(args: &[&str]) -> Run {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_zetacalc"))
        .args(args)
        .output()
        .expect("spawn zetacalc");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}
