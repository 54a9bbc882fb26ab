use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Incrementally maintained row-echelon basis of the rational span of integer
/// vectors. Fraction-free: rows are kept primitive (content 1).
#[derive(Clone, Debug, Default)]
pub struct RationalSpan {
    dim: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RationalSpan {
    pub fn new(dim: usize) -> Self {
        RationalSpan { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let a = row[*pivot].clone();
            let b = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &a * &*x - &b * r;
            }
            make_primitive(&mut v);
        }
        v
    }

    /// Adds `v`; returns true when the rank grew.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                self.rows.push((pivot, r));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

/// Rank over `Q` of a family of integer vectors of length `dim`.
pub fn rational_rank<'a, I: IntoIterator<Item = &'a Vec<BigInt>>>(dim: usize, vectors: I) -> usize {
    let mut span = RationalSpan::new(dim);
    for v in vectors {
        span.insert(v);
    }
    span.rank()
}
