use super::VertexSet;

/// All subsets of `universe` in ascending mask order, starting with the empty set.
pub fn subsets(universe: VertexSet) -> Subsets {
    Subsets { universe: universe.bits(), next: Some(0) }
}

#[derive(Clone, Debug)]
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.universe {
            None
        } else {
            // next submask in increasing order
            Some((cur | !self.universe).wrapping_add(1) & self.universe)
        };
        Some(VertexSet::from_bits(cur))
    }
}

/// All `k`-subsets of `universe` in ascending mask order.
pub fn subsets_of_size(universe: VertexSet, k: usize) -> SubsetsOfSize {
    let members = universe.to_vec();
    let next = if k <= members.len() { Some(if k == 0 { 0 } else { (1u128 << k) - 1 }) } else { None };
    SubsetsOfSize { members, k, next }
}

/// Gosper's hack over positions in `members`, scattered back onto vertex
/// labels. Scattering is monotone, so mask order is preserved.
#[derive(Clone, Debug)]
pub struct SubsetsOfSize {
    members: Vec<usize>,
    k: usize,
    next: Option<u128>,
}

impl Iterator for SubsetsOfSize {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        let m = self.members.len();
        self.next = if self.k == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < (1u128 << m)).then_some(nxt)
        };
        let mut s = VertexSet::EMPTY;
        let mut bits = cur;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            s.insert(self.members[i]);
            bits &= bits - 1;
        }
        Some(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_subsets_ascending() {
        let u: VertexSet = [1, 3, 4].iter().collect();
        let all: Vec<_> = subsets(u).collect();
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|s| s.is_subset(u)));
        assert_eq!(subsets(VertexSet::EMPTY).count(), 1);
    }

    #[test]
    fn k_subsets_ascending() {
        let u: VertexSet = [0, 2, 3, 5, 6].iter().collect();
        for k in 0..=6 {
            let got: Vec<_> = subsets_of_size(u, k).collect();
            let want: Vec<_> = subsets(u).filter(|s| s.len() == k).collect();
            assert_eq!(got, want, "k = {k}");
        }
        assert_eq!(subsets_of_size(VertexSet::full(64), 1).count(), 64);
        assert_eq!(subsets_of_size(VertexSet::full(64), 64).count(), 1);
    }
}
