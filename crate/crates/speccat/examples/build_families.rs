//! Build one catalog entry of each kind and print its order, graph6
//! encoding, and claimed exceptional eigenvalues.
//!
//! ```sh
//! cargo run --release --example build_families
//! ```

use speccat::families::{build_family, claimed_spectrum, FamilyDescriptor};

fn main() {
    let samples: Vec<FamilyDescriptor> = vec![
        "I(a=1,k=2)".parse().unwrap(),
        "II(k=2,l=2)".parse().unwrap(),
        "III(m=3)".parse().unwrap(),
        "IV(k=2)".parse().unwrap(),
        "V(a=2,b=9)".parse().unwrap(),
        "VI(a=7,b=45)".parse().unwrap(),
        "VII(a=4,m=4)".parse().unwrap(),
        "VIII(a=4,k=10)".parse().unwrap(),
        "IX(a=3,k=4)".parse().unwrap(),
        "F(t=4,r=1,k=2)".parse().unwrap(),
    ];
    for desc in samples {
        let g = build_family(&desc).unwrap();
        match claimed_spectrum(&desc) {
            Ok(c) => {
                let (r, s) = c.exceptional_roots();
                println!(
                    "{desc:<16} n={:<3} p={:<2} q={:<2} residual=x^2-{}x+({})  r={r:.4} s={s:.4}",
                    g.n(),
                    c.mult_two,
                    c.mult_minus_one,
                    c.trace_t,
                    c.det_d,
                );
            }
            Err(_) => println!("{desc:<16} n={:<3} (no two-exceptional claim)", g.n()),
        }
        println!("  graph6: {}", speccat::to_graph6(&g));
    }
}
