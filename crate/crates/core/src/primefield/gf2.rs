//! Bit-packed row reduction over `F_2`.

use super::{PFMatrix, Rref};

pub(super) fn rref(m: &PFMatrix) -> Rref {
    let (rows, cols) = (m.rows(), m.cols());
    let words = cols.div_ceil(64);
    let mut bits = vec![0u64; rows * words];
    for r in 0..rows {
        for (c, &v) in m.row(r).iter().enumerate() {
            if v & 1 == 1 {
                bits[r * words + c / 64] |= 1 << (c % 64);
            }
        }
    }

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let (w, b) = (c / 64, 1u64 << (c % 64));
        let Some(pr) = (r..rows).find(|&i| bits[i * words + w] & b != 0) else {
            continue;
        };
        if pr != r {
            for k in 0..words {
                bits.swap(pr * words + k, r * words + k);
            }
        }
        let pivot: Vec<u64> = bits[r * words..(r + 1) * words].to_vec();
        let pr_idx = r;
        crate::exec::for_each_chunk_mut(&mut bits, words, |i, row| {
            if i != pr_idx && row[w] & b != 0 {
                for k in w..words {
                    row[k] ^= pivot[k];
                }
            }
        });
        pivots.push(c);
        r += 1;
    }

    let mut data = vec![0u32; rows * cols];
    for r in 0..rows {
        for c in 0..cols {
            data[r * cols + c] = ((bits[r * words + c / 64] >> (c % 64)) & 1) as u32;
        }
    }
    Rref {
        matrix: PFMatrix::from_data(2, rows, cols, data).expect("shape preserved"),
        rank: pivots.len(),
        pivots,
    }
}
