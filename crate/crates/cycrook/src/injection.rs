//! Partial injections between row and column index sets.
//!
//! A placement of non-attacking rooks is an injective map φ from a set
//! of row indices into column indices. Identifying row index i with
//! column index i turns φ into a partial map on indices whose functional
//! graph splits into closed cycles and open paths. The cycle count is
//! the exponent of the weight z; the chain-resolution bijection φ* and
//! the column rewiring φ̄ are what make the expansion identities compose
//! across sub-boards.

use crate::error::{Error, Result};
use crate::matrix::IndexSeq;

/// Injective map from a sorted set of row indices into column indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartialInjection {
    domain: Vec<usize>,
    image: Vec<usize>,
}

impl PartialInjection {
    /// Builds from parallel (domain, image) lists; the domain is sorted
    /// (carrying its images along) and injectivity is enforced.
    pub fn new(domain: Vec<usize>, image: Vec<usize>) -> Result<Self> {
        if domain.len() != image.len() {
            return Err(Error::structural("domain/image length mismatch"));
        }
        let mut pairs: Vec<(usize, usize)> =
            domain.into_iter().zip(image.into_iter()).collect();
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::structural("repeated domain element"));
        }
        let mut images: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        images.sort_unstable();
        if images.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::structural("map is not injective"));
        }
        let (domain, image) = pairs.into_iter().unzip();
        Ok(PartialInjection { domain, image })
    }

    pub fn empty() -> Self {
        PartialInjection {
            domain: Vec::new(),
            image: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    /// Sorted domain.
    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    /// Images aligned with the sorted domain.
    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        self.domain
            .binary_search(&i)
            .ok()
            .map(|pos| self.image[pos])
    }

    pub fn preimage(&self, j: usize) -> Option<usize> {
        self.image
            .iter()
            .position(|&x| x == j)
            .map(|pos| self.domain[pos])
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.domain.iter().copied().zip(self.image.iter().copied())
    }

    /// Number of closed orbits i₁→i₂→…→i₁ lying entirely inside the
    /// domain, identifying row index with column index.
    pub fn cycle_count(&self) -> usize {
        // Injectivity means every connected component is either a closed
        // cycle or a simple open path, so a walk started anywhere on a
        // cycle returns exactly to its start.
        let mut visited = vec![false; self.domain.len()];
        let mut cycles = 0;
        for start_pos in 0..self.domain.len() {
            if visited[start_pos] {
                continue;
            }
            let start = self.domain[start_pos];
            let mut cur = start;
            loop {
                let pos = match self.domain.binary_search(&cur) {
                    Ok(p) => p,
                    Err(_) => break, // left the domain: open path
                };
                if visited[pos] {
                    break;
                }
                visited[pos] = true;
                cur = self.image[pos];
                if cur == start {
                    cycles += 1;
                    break;
                }
            }
        }
        cycles
    }

    /// Chain resolution φ*: for j in φ(S)\S, walks j, φ⁻¹(j), φ⁻¹(φ⁻¹(j)),
    /// … while inside φ(S), landing in S\φ(S).
    pub fn chain_resolve(&self, j: usize) -> Result<usize> {
        let in_domain = |x: usize| self.domain.binary_search(&x).is_ok();
        let in_image = |x: usize| self.image.contains(&x);
        if !in_image(j) || in_domain(j) {
            return Err(Error::contract(format!(
                "chain_resolve requires an index in image minus domain, got {j}"
            )));
        }
        let mut cur = j;
        loop {
            let prev = self
                .preimage(cur)
                .expect("walk stays inside the image until it exits");
            if !in_image(prev) {
                return Ok(prev);
            }
            cur = prev;
        }
    }

    /// Column rewiring φ̄: positions in the domain are removed; a position
    /// j in φ(S)\S receives the component whose position is φ*(j) (that
    /// position is the one vacated). Components at image positions are
    /// the ones consumed, so the survivors are exactly the columns not
    /// used by φ.
    pub fn rewire(&self, cols: &IndexSeq) -> IndexSeq {
        let n = cols.len();
        let mut replacement: Vec<Option<usize>> = vec![None; n + 1];
        for &j in &self.image {
            if self.domain.binary_search(&j).is_err() {
                let src = self
                    .chain_resolve(j)
                    .expect("image-minus-domain resolves by construction");
                replacement[j] = Some(cols.items()[src - 1]);
            }
        }
        let mut out = Vec::with_capacity(n - self.len());
        for pos in 1..=n {
            if self.domain.binary_search(&pos).is_ok() {
                continue; // removed: either consumed in place or vacated
            }
            match replacement[pos] {
                Some(c) => out.push(c),
                None => out.push(cols.items()[pos - 1]),
            }
        }
        IndexSeq::new(out)
    }

    pub fn render(&self) -> String {
        let body = self
            .pairs()
            .map(|(i, j)| format!("{i}->{j}"))
            .collect::<Vec<_>>()
            .join(", ");
        format!("{{{body}}}")
    }
}

/// All injective maps from `domain` into {1..n}, in lexicographic order
/// of image tuples (deterministic). Empty when |domain| > n.
pub fn enumerate_injections(domain: &[usize], n: usize) -> Vec<PartialInjection> {
    let mut sorted: Vec<usize> = domain.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    debug_assert_eq!(sorted.len(), domain.len(), "domain has repeats");
    let mut out = Vec::new();
    if sorted.len() > n {
        return out;
    }
    let mut used = vec![false; n + 1];
    let mut image = Vec::with_capacity(sorted.len());
    fn rec(
        pos: usize,
        sorted: &[usize],
        n: usize,
        used: &mut Vec<bool>,
        image: &mut Vec<usize>,
        out: &mut Vec<PartialInjection>,
    ) {
        if pos == sorted.len() {
            out.push(PartialInjection {
                domain: sorted.to_vec(),
                image: image.clone(),
            });
            return;
        }
        for j in 1..=n {
            if !used[j] {
                used[j] = true;
                image.push(j);
                rec(pos + 1, sorted, n, used, image, out);
                image.pop();
                used[j] = false;
            }
        }
    }
    rec(0, &sorted, n, &mut used, &mut image, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(pairs: &[(usize, usize)]) -> PartialInjection {
        PartialInjection::new(
            pairs.iter().map(|p| p.0).collect(),
            pairs.iter().map(|p| p.1).collect(),
        )
        .unwrap()
    }

    #[test]
    fn enumeration_counts_and_order() {
        let maps = enumerate_injections(&[1], 2);
        assert_eq!(maps.len(), 2);
        assert_eq!(maps[0].images(), &[1]);
        assert_eq!(maps[1].images(), &[2]);
        assert_eq!(enumerate_injections(&[2, 4], 4).len(), 12);
        let empty = enumerate_injections(&[], 3);
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());
        assert!(enumerate_injections(&[1, 2, 3], 2).is_empty());
    }

    #[test]
    fn cycle_count_examples() {
        assert_eq!(phi(&[(1, 1)]).cycle_count(), 1);
        assert_eq!(phi(&[(1, 2), (2, 1)]).cycle_count(), 1);
        assert_eq!(phi(&[(1, 2), (2, 3)]).cycle_count(), 0);
        assert_eq!(phi(&[(1, 1), (2, 2), (3, 3)]).cycle_count(), 3);
        assert_eq!(phi(&[(1, 2), (2, 1), (3, 3)]).cycle_count(), 2);
        // long cycle plus open tail: 2→5 dangles, 1→3→4→1 closes
        assert_eq!(phi(&[(1, 3), (3, 4), (4, 1), (2, 5)]).cycle_count(), 1);
        assert_eq!(PartialInjection::empty().cycle_count(), 0);
    }

    #[test]
    fn cycle_count_bounded_by_domain_with_identity_extremal() {
        for phi_ in enumerate_injections(&[1, 2, 3], 4) {
            let c = phi_.cycle_count();
            assert!(c <= phi_.len());
            let is_identity = phi_.pairs().all(|(i, j)| i == j);
            assert_eq!(c == phi_.len(), is_identity);
        }
    }

    #[test]
    fn chain_resolution_examples() {
        assert_eq!(phi(&[(3, 5)]).chain_resolve(5).unwrap(), 3);
        assert_eq!(phi(&[(2, 3), (3, 5)]).chain_resolve(5).unwrap(), 2);
        assert_eq!(phi(&[(1, 4), (2, 1)]).chain_resolve(4).unwrap(), 2);
        assert!(phi(&[(3, 5)]).chain_resolve(3).is_err());
        assert!(phi(&[(1, 1)]).chain_resolve(1).is_err());
    }

    #[test]
    fn chain_resolution_is_a_bijection_exhaustively() {
        // all φ with |S| ≤ 3 over N_5
        for s in 0..=3usize {
            for domain in crate::matrix::enumerate_increasing(s, 5) {
                for phi_ in enumerate_injections(domain.items(), 5) {
                    let dom: Vec<usize> = phi_.domain().to_vec();
                    let img: Vec<usize> = phi_.images().to_vec();
                    let img_minus_dom: Vec<usize> = img
                        .iter()
                        .copied()
                        .filter(|j| !dom.contains(j))
                        .collect();
                    let mut dom_minus_img: Vec<usize> = dom
                        .iter()
                        .copied()
                        .filter(|i| !img.contains(i))
                        .collect();
                    let mut resolved: Vec<usize> = img_minus_dom
                        .iter()
                        .map(|&j| phi_.chain_resolve(j).unwrap())
                        .collect();
                    resolved.sort_unstable();
                    dom_minus_img.sort_unstable();
                    assert_eq!(resolved, dom_minus_img, "φ = {}", phi_.render());
                }
            }
        }
    }

    #[test]
    fn rewire_examples() {
        let n5 = IndexSeq::full(5);
        assert_eq!(
            phi(&[(3, 5)]).rewire(&n5),
            IndexSeq::new(vec![1, 2, 4, 3])
        );
        assert_eq!(
            phi(&[(3, 2)]).rewire(&n5),
            IndexSeq::new(vec![1, 3, 4, 5])
        );
        assert_eq!(
            phi(&[(2, 3), (3, 5)]).rewire(&n5),
            IndexSeq::new(vec![1, 4, 2])
        );
        assert_eq!(
            phi(&[(1, 1)]).rewire(&IndexSeq::full(3)),
            IndexSeq::new(vec![2, 3])
        );
        assert_eq!(PartialInjection::empty().rewire(&n5), n5);
    }

    #[test]
    fn rewire_survivors_are_unconsumed_columns() {
        for s in 0..=3usize {
            for domain in crate::matrix::enumerate_increasing(s, 5) {
                for phi_ in enumerate_injections(domain.items(), 5) {
                    let cols = IndexSeq::full(5);
                    let out = phi_.rewire(&cols);
                    assert_eq!(out.len(), 5 - phi_.len());
                    let mut seen = out.items().to_vec();
                    seen.sort_unstable();
                    let mut expect: Vec<usize> = (1..=5)
                        .filter(|j| !phi_.images().contains(j))
                        .collect();
                    expect.sort_unstable();
                    assert_eq!(seen, expect, "φ = {}", phi_.render());
                }
            }
        }
    }

    #[test]
    fn render_format() {
        assert_eq!(phi(&[(2, 3), (1, 4)]).render(), "{1->4, 2->3}");
    }
}
