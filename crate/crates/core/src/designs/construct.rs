use num_integer::Integer;

use crate::exactnum::{euler_phi, ratio, Cyclotomic};
use crate::jacobi::Field;
use crate::projective::{PointSet, Points};

/// The 12-point tight 5-design in `CP^1`: the image of an orbit of the binary
/// icosahedral group, with coordinates in `Q(zeta_5)`.
///
/// With `eta = zeta_5` and `lambda = eta + eta^4 = 2 cos(2 pi / 5)`:
/// `a_1 = (1, 0)`, `a_2 = (0, 1)`, `a_k = (lambda eta^(k-3), 1)` for
/// `3 <= k <= 7` and `a_k = (eta^(k-3), -lambda)` for `8 <= k <= 12`. The
/// common normaliser is left out; the Gram matrix divides by `a^* a`.
pub fn construct_cp1_5design() -> PointSet {
    let eta = |k: i64| Cyclotomic::zeta_power(5, k);
    let one = Cyclotomic::one();
    let zero = Cyclotomic::zero();
    let lambda = &eta(1) + &eta(4);

    assert!((&(&lambda * &lambda) + &lambda - one.clone()).is_zero());
    let allowed = [
        Cyclotomic::zero(),
        &Cyclotomic::from_integer(2) - &lambda,
        &Cyclotomic::from_integer(3) + &lambda,
    ];
    for r in 0..5 {
        let d = (&eta(r) - &one).abs2();
        assert!(allowed.contains(&d), "|eta^{r} - 1|^2 = {d}");
    }

    let mut rows = vec![vec![one.clone(), zero.clone()], vec![zero, one.clone()]];
    for k in 3..=7 {
        rows.push(vec![&lambda * &eta(k - 3), one.clone()]);
    }
    for k in 8..=12 {
        rows.push(vec![eta(k - 3), -&lambda]);
    }
    PointSet::new(Field::C, 1, Points::Cyclotomic(rows)).expect("icosahedral points are valid")
}

/// The regular polygon design in `RP^1`: the `t + 1` lines at angles
/// `k pi / (t + 1)`, `k = 0..=t`, with exact coordinates
/// `(cos k pi/(t+1), sin k pi/(t+1))` as real cyclotomic numbers.
///
/// Sines need `i`, so the field is `Q(zeta_M)` with `M = lcm(2(t + 1), 4)`.
pub fn construct_rp1_polygon(t: u32) -> crate::Result<PointSet> {
    if t == 0 {
        return Err(crate::Error::Domain("polygon design needs t >= 1".into()));
    }
    let half_turn = 2 * (t as u64 + 1);
    let order = half_turn.lcm(&4);
    let step = (order / half_turn) as i64;
    let i = Cyclotomic::zeta_power(order, order as i64 / 4);
    let half = Cyclotomic::from_rational(&ratio(1, 2));
    let rows = (0..=t as i64)
        .map(|k| {
            let z = Cyclotomic::zeta_power(order, k * step);
            let zbar = Cyclotomic::zeta_power(order, -k * step);
            let cos = &(&z + &zbar) * &half;
            let sin = &(&(&z - &zbar) * &half) * &(-&i);
            vec![cos, sin]
        })
        .collect();
    PointSet::new(Field::R, 1, Points::Cyclotomic(rows))
}

/// Whether the polygon design of strength `t` has a rational angle set,
/// i.e. whether `cos(2 pi / (t + 1))` is rational: `phi(t + 1) <= 2`.
pub fn rp1_rational(t: u32) -> bool {
    euler_phi(t as u64 + 1) <= 2
}
