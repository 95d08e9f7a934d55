//! Classical integer sequences coded directly from their own standard
//! recurrences.
//!
//! These generators deliberately do not touch [`crate::recurrence`]: they are
//! the independent side of the specialization identity checks, so sharing
//! code with the general generators would defeat the comparison.

/// Tribonacci numbers T_0 = 0, T_1 = 1, T_2 = 1, T_n = T_{n-1} + T_{n-2} + T_{n-3}.
pub fn tribonacci(count: usize) -> Vec<i64> {
    three_term(count, [0, 1, 1], |t, i| t[i - 1] + t[i - 2] + t[i - 3])
}

/// Padovan numbers A_0 = A_1 = A_2 = 1, A_n = A_{n-2} + A_{n-3}.
pub fn padovan(count: usize) -> Vec<i64> {
    three_term(count, [1, 1, 1], |t, i| t[i - 2] + t[i - 3])
}

/// Fibonacci numbers F_0 = 0, F_1 = 1.
pub fn fibonacci(count: usize) -> Vec<i64> {
    two_term(count, [0, 1], |t, i| t[i - 1] + t[i - 2])
}

/// k-Fibonacci numbers F_{k,0} = 0, F_{k,1} = 1, F_{k,n} = k F_{k,n-1} + F_{k,n-2}.
pub fn k_fibonacci(k: i64, count: usize) -> Vec<i64> {
    two_term(count, [0, 1], move |t, i| k * t[i - 1] + t[i - 2])
}

/// Pell numbers B_0 = 0, B_1 = 1, B_n = 2 B_{n-1} + B_{n-2}.
pub fn pell(count: usize) -> Vec<i64> {
    two_term(count, [0, 1], |t, i| 2 * t[i - 1] + t[i - 2])
}

/// Jacobsthal numbers J_0 = 0, J_1 = 1, J_n = J_{n-1} + 2 J_{n-2}.
pub fn jacobsthal(count: usize) -> Vec<i64> {
    two_term(count, [0, 1], |t, i| t[i - 1] + 2 * t[i - 2])
}

/// Tribonacci-Lucas numbers Y_0 = 3, Y_1 = 1, Y_2 = 3, Y_n = Y_{n-1} + Y_{n-2} + Y_{n-3}.
pub fn tribonacci_lucas(count: usize) -> Vec<i64> {
    three_term(count, [3, 1, 3], |t, i| t[i - 1] + t[i - 2] + t[i - 3])
}

/// Perrin numbers Z_0 = 3, Z_1 = 0, Z_2 = 2, Z_n = Z_{n-2} + Z_{n-3}.
pub fn perrin(count: usize) -> Vec<i64> {
    three_term(count, [3, 0, 2], |t, i| t[i - 2] + t[i - 3])
}

fn two_term(count: usize, seeds: [i64; 2], step: impl Fn(&[i64], usize) -> i64) -> Vec<i64> {
    let mut t: Vec<i64> = seeds.into_iter().take(count).collect();
    for i in t.len()..count {
        let next = step(&t, i);
        t.push(next);
    }
    t
}

fn three_term(count: usize, seeds: [i64; 3], step: impl Fn(&[i64], usize) -> i64) -> Vec<i64> {
    let mut t: Vec<i64> = seeds.into_iter().take(count).collect();
    for i in t.len()..count {
        let next = step(&t, i);
        t.push(next);
    }
    t
}
