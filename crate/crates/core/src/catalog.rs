//! Named solutions used throughout the tests and the CLI documentation.

use crate::perm::Permutation;
use crate::solution::YbeSolution;

fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cycles).expect("catalog cycles are well formed")
}

/// Four-atom solution satisfying property (C):
/// `g1=(2,3) g2=(1,4) g3=(1,2,4,3) g4=(1,3,4,2)`,
/// `f1=(2,4) f2=(1,3) f3=(1,4,3,2) f4=(1,2,3,4)`.
pub fn sol_a() -> YbeSolution {
    let g = [
        cyc(4, &[&[2, 3]]),
        cyc(4, &[&[1, 4]]),
        cyc(4, &[&[1, 2, 4, 3]]),
        cyc(4, &[&[1, 3, 4, 2]]),
    ];
    let f = [
        cyc(4, &[&[2, 4]]),
        cyc(4, &[&[1, 3]]),
        cyc(4, &[&[1, 4, 3, 2]]),
        cyc(4, &[&[1, 2, 3, 4]]),
    ];
    YbeSolution::from_gf_tables(4, &g, &f).expect("sol_a tables")
}

/// Four-atom solution violating property (C), with relations
/// `x1x2=x3x1, x2x2=x4x3, x1x3=x4x1, x3x3=x2x4, x1x4=x2x1, x4x4=x3x2`.
pub fn sol_b() -> YbeSolution {
    let g = [
        cyc(4, &[&[2, 3, 4]]),
        cyc(4, &[&[2, 4, 3]]),
        cyc(4, &[&[2, 4, 3]]),
        cyc(4, &[&[2, 4, 3]]),
    ];
    let f = [
        cyc(4, &[&[2, 4, 3]]),
        cyc(4, &[&[2, 3, 4]]),
        cyc(4, &[&[2, 3, 4]]),
        cyc(4, &[&[2, 3, 4]]),
    ];
    YbeSolution::from_gf_tables(4, &g, &f).expect("sol_b tables")
}

/// The flip `S(x, y) = (y, x)` on `n` atoms.
pub fn trivial(n: usize) -> YbeSolution {
    let id = vec![Permutation::identity(n); n];
    YbeSolution::from_gf_tables(n, &id, &id).expect("trivial tables")
}

/// Six atoms, `g_i = f_i = id` for `i <= 4` and `g5 = g6 = f5 = f6 = (5,6)`.
pub fn almost_trivial6() -> YbeSolution {
    let mut tables = vec![Permutation::identity(6); 4];
    tables.push(cyc(6, &[&[5, 6]]));
    tables.push(cyc(6, &[&[5, 6]]));
    YbeSolution::from_gf_tables(6, &tables, &tables).expect("almost trivial tables")
}
