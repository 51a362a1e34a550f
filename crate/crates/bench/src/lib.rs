//! Fixed workloads shared by the benchmarks and their sanity tests.

use pointfree_core::derived::{koszul, ChainComplex};
use pointfree_core::lattice::DLatticePresentation;
use pointfree_core::ring::{Matrix, RingDescriptor};
use pointfree_core::scheme::{GluingSpec, SchemeSpec};

pub fn free_lattice(n: usize) -> DLatticePresentation {
    let names: Vec<String> = (0..n).map(|i| format!("x{}", i)).collect();
    DLatticePresentation::free(&names).expect("free lattice")
}

/// A dense integer matrix with small entries, fixed by a quadratic formula.
pub fn int_matrix(rows: usize, cols: usize) -> Matrix {
    let z = RingDescriptor::Integers;
    let entries = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| z.from_int(((7 * i + 3 * j * j + i * j) % 19) as i64 - 9))
                .collect()
        })
        .collect();
    Matrix::from_rows(rows, cols, entries).expect("matrix")
}

pub fn koszul_int(gens: &[i64]) -> ChainComplex {
    let z = RingDescriptor::Integers;
    let fs: Vec<_> = gens.iter().map(|&g| z.from_int(g)).collect();
    koszul(&z, &fs).expect("koszul complex")
}

/// The projective line over ℚ from two affine charts.
pub fn projective_line() -> SchemeSpec {
    let m = |k: &str, v: &str| [(k.to_string(), v.to_string())].into_iter().collect();
    SchemeSpec {
        pieces: vec![RingDescriptor::qx("t"), RingDescriptor::qx("s")],
        gluings: vec![GluingSpec {
            i: 0,
            j: 1,
            f_ij: "t".into(),
            f_ji: "s".into(),
            phi: m("t", "1/s"),
            phi_inv: m("s", "1/t"),
        }],
    }
}
