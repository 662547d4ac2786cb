use std::cmp::Ordering;

/// An exponent vector indexed by variable position, together with its
/// weighted degree.
///
/// `Ord` is the weighted graded reverse lexicographic order: higher weighted
/// degree first, ties broken by the last variable where the exponents differ
/// (the smaller exponent wins). The cached degree only makes sense relative to
/// the weights of the owning ring, so monomials from different rings must not
/// be compared.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; nvars].into_boxed_slice(),
        }
    }

    pub fn from_exponents(exps: Vec<u32>, weights: &[u32]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let degree = exps.iter().zip(weights).map(|(e, w)| e * w).sum();
        Monomial {
            degree,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn variable(i: usize, weights: &[u32]) -> Self {
        let mut exps = vec![0; weights.len()];
        exps[i] = 1;
        Monomial::from_exponents(exps, weights)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            degree: other.degree - self.degree,
            exps: other
                .exps
                .iter()
                .zip(self.exps.iter())
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::from_exponents(exps, weights)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(other.exps.iter()).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of weighted degree exactly `d`, in increasing
/// monomial order.
pub fn monomials_of_degree(weights: &[u32], d: u32) -> Vec<Monomial> {
    fn go(weights: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i];
        let mut e = 0;
        while e * w <= left {
            cur.push(e);
            go(weights, i + 1, left - e * w, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut raw = Vec::new();
    go(weights, 0, d, &mut Vec::new(), &mut raw);
    let mut monos: Vec<Monomial> = raw
        .into_iter()
        .map(|e| Monomial::from_exponents(e, weights))
        .collect();
    monos.sort();
    monos
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        // gamma, beta1 both degree 1: gamma^2 > beta1*gamma.
        let w = [1, 1, 2];
        let g2 = Monomial::from_exponents(vec![2, 0, 0], &w);
        let bg = Monomial::from_exponents(vec![1, 1, 0], &w);
        let b2 = Monomial::from_exponents(vec![0, 0, 1], &w);
        assert!(g2 > bg);
        assert!(bg > b2);
    }

    #[test]
    fn counts_weighted_monomials() {
        // lambda1 (1), lambda2 (2), gamma (1) in degree 3:
        // l1^3, l1^2 g, l1 g^2, g^3, l1 l2, l2 g
        assert_eq!(monomials_of_degree(&[1, 2, 1], 3).len(), 6);
        assert_eq!(monomials_of_degree(&[1, 2], 0).len(), 1);
    }

    #[test]
    fn divisibility_and_quotient() {
        let w = [1, 2];
        let a = Monomial::from_exponents(vec![1, 1], &w);
        let b = Monomial::from_exponents(vec![3, 1], &w);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Monomial::from_exponents(vec![2, 0], &w));
    }
}
