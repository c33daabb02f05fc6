//! Determined-by-spectrum table for generalized friendship graphs with
//! t - r = 3: every verdict is backed by a certified witness or an
//! exhausted bounded search.
//!
//! ```sh
//! cargo run --release --example ds_verdicts
//! ```

use speccat::cospectral::friendship_ds_summary;

fn main() {
    println!("{:>3} {:>4}  verdict", "r", "k");
    for r in 1..=6usize {
        for k in 2..=20usize {
            let v = friendship_ds_summary(r, k).unwrap();
            if v.is_ds {
                continue;
            }
            let w = v.witness.as_ref().unwrap();
            println!(
                "{r:>3} {k:>4}  not DS ({:?}): cospectral with {} + {} K3",
                v.exception_case.unwrap(),
                w.right.0,
                w.right.1
            );
        }
    }
    println!("(all other r <= 6, k <= 20 are determined by their spectrum)");
}
