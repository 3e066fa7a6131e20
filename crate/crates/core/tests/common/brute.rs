//! Exhaustive homomorphism counting: try every assignment of group elements
//! to generators and evaluate every relator letter by letter.

use arcknot_core::knotting::{FiniteGroup, GroupPresentation};

fn eval(word: &[(usize, i8)], images: &[usize], g: &FiniteGroup) -> usize {
    let mut acc = 0;
    for &(x, e) in word {
        let y = if e > 0 { images[x] } else { g.inv(images[x]) };
        acc = g.mul(acc, y);
    }
    acc
}

pub fn brute_count_homs(p: &GroupPresentation, g: &FiniteGroup) -> u64 {
    let k = g.order();
    let mut images = vec![0usize; p.generators];
    let mut count = 0u64;
    loop {
        if p.relators.iter().all(|r| eval(r, &images, g) == 0) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == images.len() {
                return count;
            }
            images[i] += 1;
            if images[i] < k {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}
