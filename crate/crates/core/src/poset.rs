//! The Young composition poset: cover relations, comparison, and box-adding
//! operators on compositions.

use crate::composition::Composition;
use crate::error::{Error, Result};

/// The compositions covering `beta`: append a part 1, or increment a part that
/// is not repeated later. Ordered by the column of the added box.
pub fn lc_covers(beta: &Composition) -> Vec<Composition> {
    let parts = beta.parts();
    let max = parts.iter().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    for col in 1..=max + 1 {
        if let Ok(c) = box_add(col, beta) {
            out.push(c);
        }
    }
    out
}

/// Decides `beta <=_c alpha`: componentwise containment together with the
/// pairwise condition that every weak rise of `beta` stays a weak rise in `alpha`.
pub fn lc_leq(beta: &Composition, alpha: &Composition) -> bool {
    let b = beta.parts();
    let a = alpha.parts();
    if b.len() > a.len() {
        return false;
    }
    for i in 0..b.len() {
        if b[i] > a[i] {
            return false;
        }
    }
    for j in 0..b.len() {
        for i in j + 1..b.len() {
            if b[i] >= b[j] && a[i] < a[j] {
                return false;
            }
        }
    }
    true
}

/// The box-adding operator `t_i`: the unique cover of `alpha` whose new box
/// lies in column `i`. For `i = 1` this appends a part 1; for `i >= 2` it
/// increments the last part equal to `i - 1`.
pub fn box_add(col: usize, alpha: &Composition) -> Result<Composition> {
    if col == 0 {
        return Err(Error::Precondition("column index must be positive".into()));
    }
    let mut parts = alpha.parts().to_vec();
    if col == 1 {
        parts.push(1);
        return Ok(Composition::from_parts_unchecked(parts));
    }
    match parts.iter().rposition(|&p| p == col - 1) {
        Some(k) => {
            parts[k] += 1;
            Ok(Composition::from_parts_unchecked(parts))
        }
        None => Err(Error::Precondition(format!(
            "no part of {alpha} equals {}",
            col - 1
        ))),
    }
}

/// Applies `t_w = t_{w_1} ... t_{w_n}` to `beta`, rightmost letter first.
pub fn box_add_word(word: &[usize], beta: &Composition) -> Result<Composition> {
    let mut cur = beta.clone();
    for &col in word.iter().rev() {
        cur = box_add(col, &cur)?;
    }
    Ok(cur)
}

/// The compositions covered by `gamma` (downward covers), each paired with the
/// column of the removed box.
pub fn lc_covered_by(gamma: &Composition) -> Vec<(usize, Composition)> {
    let parts = gamma.parts();
    let mut out = Vec::new();
    for k in 0..parts.len() {
        let v = parts[k];
        if k == parts.len() - 1 && v == 1 {
            // drop a trailing part 1
            let mut down = parts.to_vec();
            down.pop();
            out.push((1, Composition::from_parts_unchecked(down)));
            continue;
        }
        if v >= 2 && !parts[k + 1..].contains(&(v - 1)) {
            let mut down = parts.to_vec();
            down[k] = v - 1;
            out.push((v, Composition::from_parts_unchecked(down)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions_of;
    use std::collections::BTreeSet;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn covers_of_2132() {
        let covers: BTreeSet<Composition> = lc_covers(&c(&[2, 1, 3, 2])).into_iter().collect();
        let expected: BTreeSet<Composition> = [
            c(&[2, 1, 3, 2, 1]),
            c(&[2, 2, 3, 2]),
            c(&[2, 1, 3, 3]),
            c(&[2, 1, 4, 2]),
        ]
        .into_iter()
        .collect();
        assert_eq!(covers, expected);
    }

    #[test]
    fn covers_of_empty() {
        assert_eq!(lc_covers(&Composition::empty()), vec![c(&[1])]);
    }

    #[test]
    fn box_add_examples() {
        assert_eq!(box_add(1, &Composition::empty()).unwrap(), c(&[1]));
        assert_eq!(box_add(3, &c(&[2, 1, 3, 2])).unwrap(), c(&[2, 1, 3, 3]));
        assert_eq!(box_add(4, &c(&[2, 1, 3, 2])).unwrap(), c(&[2, 1, 4, 2]));
        assert!(box_add(5, &c(&[2, 1])).is_err());
    }

    #[test]
    fn box_add_word_examples() {
        assert_eq!(box_add_word(&[1], &c(&[1])).unwrap(), c(&[1, 1]));
        assert_eq!(box_add_word(&[2], &c(&[1])).unwrap(), c(&[2]));
        assert_eq!(box_add_word(&[], &c(&[3, 1])).unwrap(), c(&[3, 1]));
        // rightmost letter applies first: t_2 t_1 (empty) = t_2((1)) = (2)
        assert_eq!(box_add_word(&[2, 1], &Composition::empty()).unwrap(), c(&[2]));
        assert!(box_add_word(&[1, 3], &Composition::empty()).is_err());
    }

    #[test]
    fn every_cover_from_unique_column() {
        for n in 0..=6 {
            for beta in compositions_of(n) {
                let covers = lc_covers(&beta);
                let distinct: BTreeSet<&Composition> = covers.iter().collect();
                assert_eq!(covers.len(), distinct.len());
                for cov in &covers {
                    let cols: Vec<usize> = (1..=n + 2)
                        .filter(|&i| box_add(i, &beta).ok().as_ref() == Some(cov))
                        .collect();
                    assert_eq!(cols.len(), 1, "cover {cov} of {beta} from one column");
                }
            }
        }
    }

    /// Reachability oracle: breadth-first search along upward covers.
    fn reachable_set(beta: &Composition, max_size: usize) -> BTreeSet<Composition> {
        let mut all = BTreeSet::new();
        all.insert(beta.clone());
        let mut frontier = vec![beta.clone()];
        for _ in beta.size()..max_size {
            let mut next = BTreeSet::new();
            for b in frontier {
                for cov in lc_covers(&b) {
                    if all.insert(cov.clone()) {
                        next.insert(cov);
                    }
                }
            }
            frontier = next.into_iter().collect();
        }
        all
    }

    #[test]
    fn leq_example_from_demo_shapes() {
        // saturated-chain oracle, consistent with the skew shape (3,5,2)//(1,2)
        assert!(reachable_set(&c(&[1, 2]), 10).contains(&c(&[3, 5, 2])));
        assert!(lc_leq(&c(&[1, 2]), &c(&[3, 5, 2])));
    }

    #[test]
    fn leq_matches_reachability() {
        let mut all = Vec::new();
        for n in 0..=7 {
            all.extend(compositions_of(n));
        }
        for beta in &all {
            let reach = reachable_set(beta, 7);
            for alpha in &all {
                assert_eq!(
                    lc_leq(beta, alpha),
                    reach.contains(alpha),
                    "lc_leq vs chain reachability for {beta} <=_c {alpha}"
                );
            }
        }
    }

    #[test]
    fn leq_reflexive_and_downward_covers() {
        for n in 0..=6 {
            for gamma in compositions_of(n) {
                assert!(lc_leq(&gamma, &gamma));
                let ups: BTreeSet<Composition> = lc_covers(&gamma).into_iter().collect();
                for cov in &ups {
                    assert!(lc_leq(&gamma, cov));
                }
                let downs = lc_covered_by(&gamma);
                for (col, down) in &downs {
                    assert_eq!(&box_add(*col, down).unwrap(), &gamma);
                }
                // downward covers are exactly the upward covers seen from below
                for m_comp in compositions_of(n.saturating_sub(1)) {
                    let up_has = lc_covers(&m_comp).contains(&gamma);
                    let down_has = downs.iter().any(|(_, d)| d == &m_comp);
                    assert_eq!(up_has, down_has, "{m_comp} vs {gamma}");
                }
            }
        }
    }
}
