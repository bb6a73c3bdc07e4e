use super::*;
use rand::{Rng, SeedableRng};

/// Textbook Smith form over i128: first nonzero pivot, gcd steps through
/// extended Euclid. Slow and independent of the library kernels.
fn naive_smith(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
        if b == 0 {
            if a < 0 {
                (-a, -1, 0)
            } else {
                (a, 1, 0)
            }
        } else {
            let (g, x, y) = ext_gcd(b, a % b);
            (g, y, x - (a / b) * y)
        }
    }
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut t = 0;
    let mut out = Vec::new();
    while t < m.min(n) {
        let Some((pi, pj)) = (t..m).flat_map(|i| (t..n).map(move |j| (i, j))).find(|&(i, j)| a[i][j] != 0) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..m {
                if a[i][t] != 0 && a[i][t] % a[t][t] == 0 {
                    let q = a[i][t] / a[t][t];
                    for j in 0..n {
                        a[i][j] -= q * a[t][j];
                    }
                } else if a[i][t] != 0 {
                    let (g, x, y) = ext_gcd(a[t][t], a[i][t]);
                    let (u, v) = (a[t][t] / g, a[i][t] / g);
                    for j in 0..n {
                        let (p, q) = (a[t][j], a[i][j]);
                        a[t][j] = x * p + y * q;
                        a[i][j] = -v * p + u * q;
                    }
                    changed = true;
                }
            }
            for j in t + 1..n {
                if a[t][j] != 0 && a[t][j] % a[t][t] == 0 {
                    let q = a[t][j] / a[t][t];
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                } else if a[t][j] != 0 {
                    let (g, x, y) = ext_gcd(a[t][t], a[t][j]);
                    let (u, v) = (a[t][t] / g, a[t][j] / g);
                    for row in a.iter_mut() {
                        let (p, q) = (row[t], row[j]);
                        row[t] = x * p + y * q;
                        row[j] = -v * p + u * q;
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    // Diagonal to invariant factors: repeated gcd/lcm normalization.
    let k = out.len();
    for i in 0..k {
        for j in i + 1..k {
            let (x, y) = (out[i], out[j]);
            let g = gcd(x, y);
            out[i] = g;
            out[j] = x / g * y;
        }
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn from_i64(rows: &[Vec<i64>]) -> IntegerMatrix {
    IntegerMatrix::from_dense(rows).unwrap()
}

fn factors(s: &SmithForm) -> Vec<i128> {
    s.invariant_factors.iter().map(|d| d.to_i128().unwrap()).collect()
}

fn random_matrix(rng: &mut impl Rng, r: usize, c: usize, density: f64, range: i64) -> Vec<Vec<i64>> {
    (0..r)
        .map(|_| (0..c).map(|_| if rng.gen_bool(density) { rng.gen_range(-range..=range) } else { 0 }).collect())
        .collect()
}

fn rp2_boundary_2() -> IntegerMatrix {
    let tris = [[1, 3, 6], [1, 2, 6], [2, 3, 4], [2, 4, 6], [1, 3, 4], [1, 2, 5], [1, 4, 5], [2, 3, 5], [3, 5, 6], [4, 5, 6]];
    let mut edges = Vec::new();
    for a in 1..=6 {
        for b in a + 1..=6 {
            edges.push((a, b));
        }
    }
    let mut trip = Vec::new();
    for (c, t) in tris.iter().enumerate() {
        for (k, (a, b)) in [(t[1], t[2]), (t[0], t[2]), (t[0], t[1])].into_iter().enumerate() {
            let r = edges.iter().position(|&e| e == (a, b)).unwrap();
            trip.push((r, c, if k % 2 == 0 { 1i64 } else { -1 }));
        }
    }
    IntegerMatrix::from_triplets(15, 10, trip).unwrap()
}

#[test]
fn tiny_cases() {
    let s = smith_normal_form(&from_i64(&[vec![2]]));
    assert_eq!((s.rank, factors(&s)), (1, vec![2]));
    let s = smith_normal_form(&IntegerMatrix::identity(3));
    assert_eq!((s.rank, factors(&s)), (3, vec![1, 1, 1]));
    assert_eq!(smith_normal_form(&IntegerMatrix::zeros(0, 0)).rank, 0);
    assert_eq!(smith_normal_form(&IntegerMatrix::zeros(3, 4)).rank, 0);
    assert_eq!(rank_mod_p(&IntegerMatrix::identity(3), 2).unwrap(), 3);
    assert_eq!(rank_mod_p(&from_i64(&[vec![2]]), 2).unwrap(), 0);
    assert!(matches!(rank_mod_p(&IntegerMatrix::identity(3), 4), Err(Error::NotPrime(4))));
    assert_eq!(rank_rational(&IntegerMatrix::zeros(5, 5)), 0);
    assert_eq!(rank_rational(&IntegerMatrix::identity(7)), 7);
}

#[test]
fn projective_plane_boundary() {
    let d2 = rp2_boundary_2();
    assert_eq!((d2.rows(), d2.cols()), (15, 10));
    let s = smith_normal_form(&d2);
    let mut expect = vec![1i128; 9];
    expect.push(2);
    assert_eq!(factors(&s), expect);
    let dense: Vec<Vec<i128>> =
        d2.to_dense().iter().map(|r| r.iter().map(|v| v.to_i128().unwrap()).collect()).collect();
    assert_eq!(naive_smith(dense), expect);
    assert_eq!(rank_mod_p(&d2, 2).unwrap(), 9);
    assert_eq!(rank_mod_p(&d2, 3).unwrap(), 10);
}

#[test]
fn agrees_with_naive_oracle() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(31);
    for _ in 0..400 {
        let r = rng.gen_range(0..8);
        let c = rng.gen_range(0..8);
        let (density, range) = (rng.gen_range(0.1..1.0), rng.gen_range(1..6));
        let a = random_matrix(&mut rng, r, c, density, range);
        let s = smith_normal_form(&from_i64(&a));
        let wide: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
        assert_eq!(factors(&s), naive_smith(wide), "{a:?}");
        assert!(s.invariant_factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        assert!(s.invariant_factors.iter().all(|d| d.is_positive()));
    }
}

#[test]
fn invariant_under_unimodular_transforms() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(32);
    for _ in 0..100 {
        let (r, c) = (rng.gen_range(1..7), rng.gen_range(1..7));
        let a = random_matrix(&mut rng, r, c, 0.6, 4);
        let m = from_i64(&a);
        let mut dense = a.clone();
        for _ in 0..10 {
            let (i, j) = (rng.gen_range(0..r), rng.gen_range(0..r));
            let k = rng.gen_range(-2..=2);
            if i != j {
                for col in 0..c {
                    dense[i][col] += k * dense[j][col];
                }
            }
            let (x, y) = (rng.gen_range(0..c), rng.gen_range(0..c));
            if x != y {
                for row in dense.iter_mut() {
                    row[x] -= k * row[y];
                }
            }
            dense.swap(rng.gen_range(0..r), rng.gen_range(0..r));
        }
        assert_eq!(smith_normal_form(&m), smith_normal_form(&from_i64(&dense)));
    }
}

#[test]
fn ranks_agree_with_smith() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(33);
    for _ in 0..500 {
        let (r, c) = (rng.gen_range(0..10), rng.gen_range(0..10));
        let density = rng.gen_range(0.1..0.9);
        let a = random_matrix(&mut rng, r, c, density, 7);
        let m = from_i64(&a);
        let s = smith_normal_form(&m);
        assert_eq!(rank_rational(&m), s.rank);
        let big: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        assert_eq!(bareiss_rank(big), s.rank);
        for p in [2u64, 3, 5, 7, 101] {
            let divisible = s.invariant_factors.iter().filter(|d| (*d % p).is_zero()).count();
            assert_eq!(rank_mod_p(&m, p).unwrap(), s.rank - divisible, "p={p} {a:?}");
        }
    }
}

#[test]
fn unimodular_products_have_full_rank_mod_every_prime() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(34);
    for _ in 0..20 {
        let n = 20;
        let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        for _ in 0..40 {
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if i != j {
                let k = rng.gen_range(-1..=1);
                for col in 0..n {
                    u[i][col] += k * u[j][col];
                }
            }
        }
        let m = from_i64(&u);
        let s = smith_normal_form(&m);
        assert_eq!(s.rank, n);
        assert!(s.torsion().next().is_none());
        for p in [2, 3, 65521] {
            assert_eq!(rank_mod_p(&m, p).unwrap(), n);
        }
    }
}

#[test]
fn overflow_escapes_to_big_integers() {
    let big = 1i64 << 62;
    let m = from_i64(&[vec![1, big], vec![3, big]]);
    assert!(m.to_sparse_i64().is_some());
    let s = smith_normal_form(&m);
    assert_eq!(s.invariant_factors, vec![BigInt::from(1), BigInt::from(1u64 << 63)]);
    assert_eq!(rank_rational(&m), 2);

    let huge = BigInt::from(1u128 << 100);
    let m = IntegerMatrix::from_triplets(2, 2, [(0, 0, huge.clone()), (1, 1, huge.clone() * 3)]).unwrap();
    assert!(m.to_sparse_i64().is_none());
    assert_eq!(smith_normal_form(&m).invariant_factors, vec![huge.clone(), huge * 3]);
}

#[test]
fn sign_matrices_stress() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(35);
    for _ in 0..50 {
        let a: Vec<Vec<i64>> = (0..12).map(|_| (0..12).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect()).collect();
        let wide: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
        assert_eq!(factors(&smith_normal_form(&from_i64(&a))), naive_smith(wide));
    }
}

#[test]
fn multiplication_and_transpose() {
    let a = from_i64(&[vec![1, 2], vec![0, 1], vec![3, 0]]);
    let b = from_i64(&[vec![1, 0, 1], vec![2, 1, 0]]);
    assert_eq!(a.mul(&b).unwrap(), from_i64(&[vec![5, 2, 1], vec![2, 1, 0], vec![3, 0, 3]]));
    assert_eq!(a.transpose().transpose(), a);
    assert!(a.mul(&a).is_err());
}

#[test]
fn prime_factors() {
    assert_eq!(prime_divisors(&BigInt::from(2)), vec![2]);
    assert_eq!(prime_divisors(&BigInt::from(360)), vec![2, 3, 5]);
    assert_eq!(prime_divisors(&BigInt::from(97)), vec![97]);
    assert!(prime_divisors(&BigInt::from(1)).is_empty());
}
