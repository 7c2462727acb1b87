//! Hole counting on a small polyomino stored as one bitmask per row.
//!
//! Same padded flood fill as [`super::Raster`], done a row at a time with
//! word operations. Used by the enumerators, where millions of tiny shapes
//! are measured.

const MAX_ROWS: usize = 62;

/// Saturates `seed` within the runs of `open` it touches.
#[inline]
fn fill_row(mut seed: u64, open: u64) -> u64 {
    seed &= open;
    loop {
        let next = (seed | (seed << 1) | (seed >> 1)) & open;
        if next == seed {
            return seed;
        }
        seed = next;
    }
}

/// Flood fills `region` from `seed` with 4-adjacency. Both slices must be
/// the same length; `seed` is overwritten with the result.
fn flood(seed: &mut [u64], region: &[u64]) {
    let h = seed.len();
    for i in 0..h {
        seed[i] = fill_row(seed[i], region[i]);
    }
    loop {
        let mut changed = false;
        for i in 1..h {
            let grown = fill_row(seed[i] | (seed[i - 1] & region[i]), region[i]);
            if grown != seed[i] {
                seed[i] = grown;
                changed = true;
            }
        }
        for i in (0..h - 1).rev() {
            let grown = fill_row(seed[i] | (seed[i + 1] & region[i]), region[i]);
            if grown != seed[i] {
                seed[i] = grown;
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

/// Number of holes of the shape whose row `y` has tile `x` at bit `x` of
/// `rows[y]`. Empty leading or trailing rows and columns are allowed.
///
/// # Panics
/// If the shape spans more than 62 rows or 62 columns.
pub fn hole_count_rows(rows: &[u64]) -> u32 {
    let all = rows.iter().fold(0, |a, &r| a | r);
    if all == 0 {
        return 0;
    }
    let shift = all.trailing_zeros();
    let width = 64 - (all >> shift).leading_zeros() as usize;
    let first = rows.iter().position(|&r| r != 0).unwrap();
    let last = rows.iter().rposition(|&r| r != 0).unwrap();
    let height = last - first + 1;
    assert!(
        height <= MAX_ROWS && width <= MAX_ROWS,
        "shape too large for the row-bitmask hole counter"
    );

    // One ring of padding: rows 0 and height+1, bits 0 and width+1.
    let h = height + 2;
    let full = (1u64 << (width + 2)) - 1;
    let mut open = [0u64; MAX_ROWS + 2];
    let mut outside = [0u64; MAX_ROWS + 2];
    for i in 0..h {
        let tiles = if (1..=height).contains(&i) {
            (rows[first + i - 1] >> shift) << 1
        } else {
            0
        };
        open[i] = !tiles & full;
    }
    outside[0] = full;
    outside[h - 1] = full;
    for o in &mut outside[1..h - 1] {
        *o = 1 | (1 << (width + 1));
    }
    flood(&mut outside[..h], &open[..h]);

    let mut inside = [0u64; MAX_ROWS + 2];
    let mut any = false;
    for i in 0..h {
        inside[i] = open[i] & !outside[i];
        any |= inside[i] != 0;
    }
    if !any {
        return 0;
    }
    let mut holes = 0;
    let mut comp = [0u64; MAX_ROWS + 2];
    while let Some(i) = inside[..h].iter().position(|&r| r != 0) {
        comp[..h].fill(0);
        comp[i] = inside[i] & inside[i].wrapping_neg();
        flood(&mut comp[..h], &inside[..h]);
        for j in 0..h {
            inside[j] &= !comp[j];
        }
        holes += 1;
    }
    holes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows_of(ascii: &str) -> Vec<u64> {
        // top line is the highest row
        let mut rows: Vec<u64> = ascii
            .lines()
            .map(|l| {
                l.bytes()
                    .enumerate()
                    .filter(|&(_, b)| b == b'#')
                    .fold(0, |r, (x, _)| r | 1 << x)
            })
            .collect();
        rows.reverse();
        rows
    }

    #[test]
    fn simple_shapes() {
        assert_eq!(hole_count_rows(&rows_of("#")), 0);
        assert_eq!(hole_count_rows(&rows_of("###\n#.#\n###")), 1);
        assert_eq!(hole_count_rows(&rows_of("###\n#.#\n##.")), 1);
        assert_eq!(hole_count_rows(&rows_of("###\n#..\n###")), 0);
        assert_eq!(hole_count_rows(&rows_of("#####\n#.#.#\n#####")), 2);
        assert_eq!(hole_count_rows(&rows_of(".##.\n#.##\n##.#\n.##.")), 2);
        assert_eq!(hole_count_rows(&[]), 0);
    }

    #[test]
    fn offsets_do_not_matter() {
        let base = rows_of("###\n#.#\n###");
        let mut shifted: Vec<u64> = vec![0, 0];
        shifted.extend(base.iter().map(|r| r << 20));
        shifted.push(0);
        assert_eq!(hole_count_rows(&shifted), 1);
    }

    #[test]
    fn spiral_corridor_reaches_outside() {
        let s = "#######\n\
                 #.....#\n\
                 #.###.#\n\
                 #.#.#.#\n\
                 #.#...#\n\
                 #.#####\n\
                 #......";
        assert_eq!(hole_count_rows(&rows_of(s)), 0);
    }
}
