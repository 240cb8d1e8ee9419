use serde::Serialize;

use crate::arith::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClosedForm {
    Sign(Sign),
    NotApplicable,
}

fn is_odd_prime(p: u64) -> bool {
    p >= 3 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Sign of `c_t^(m)(n)` from the closed-form results for `t = 2` (any `m`)
/// and for `(p, 1)`, `(p, 3)` with `p` an odd prime.
///
/// For `(p, 1)`, residues attained by `j(3j+1)/2` with `|j| <= (p-1)/2` take
/// the sign `(-1)^j` of the attaining `j` with the smallest offset, from index
/// `2p + offset` on; below that the answer is `NotApplicable`. Other residues
/// vanish identically. For `(p, 3)` the same holds with `j(j+1)/2`,
/// `0 <= j <= (p-1)/2`, from index `offset` on.
pub fn predict_sign_closed_form(t: u64, m: u64, n: u64) -> ClosedForm {
    if t == 2 {
        if m == 1 && n == 2 {
            return ClosedForm::Sign(Sign::Zero);
        }
        return ClosedForm::Sign(if n % 2 == 0 { Sign::Positive } else { Sign::Negative });
    }
    if !is_odd_prime(t) || (m != 1 && m != 3) {
        return ClosedForm::NotApplicable;
    }
    let p = t as i64;
    let half = (p - 1) / 2;
    let (js, offset, start): (Vec<i64>, fn(i64) -> i64, i64) = if m == 1 {
        ((-half..=half).collect(), |j| j * (3 * j + 1) / 2, 2 * p)
    } else {
        ((0..=half).collect(), |j| j * (j + 1) / 2, 0)
    };
    let hit = js.into_iter().map(|j| (offset(j), j)).filter(|&(e, _)| e.rem_euclid(p) == (n as i64) % p).min();
    match hit {
        None => ClosedForm::Sign(Sign::Zero),
        Some((e, j)) if n as i64 >= start + e => ClosedForm::Sign(Sign::alternating(j)),
        Some(_) => ClosedForm::NotApplicable,
    }
}
