//! Equitable partitions in action: block partitions of catalog graphs, their
//! quotient matrices, and the exact divisibility of characteristic
//! polynomials.
//!
//! ```sh
//! cargo run --release --example quotient_partitions
//! ```

use speccat::families::{build_family, natural_block_sizes, FamilyDescriptor};
use speccat::graph::Graph;
use speccat::spectral::{quotient, verify_quotient_eigenvalues, Partition};

fn main() {
    // the path P3 with endpoints and middle
    let p3 = Graph::path(3);
    let part = Partition::new(3, vec![vec![0, 2], vec![1]]).unwrap();
    let q = quotient(&p3, &part).unwrap();
    println!("P3 endpoints/middle quotient: {}", q.quotient.unwrap());

    // a partition that fails to be equitable is an outcome, not an error
    let bad = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
    let q = quotient(&Graph::path(4), &bad).unwrap();
    println!("P4 half/half equitable: {}", q.equitable);

    for text in ["I(a=3,k=4)", "II(k=3,l=2)", "III(m=4)", "IX(a=3,k=4)"] {
        let desc: FamilyDescriptor = text.parse().unwrap();
        let g = build_family(&desc).unwrap();
        let part = Partition::from_block_sizes(&natural_block_sizes(&desc));
        let r = quotient(&g, &part).unwrap();
        let qm = r.quotient.expect("block partitions are equitable");
        verify_quotient_eigenvalues(&g, &part).unwrap();
        println!(
            "{text:<14} quotient char poly {} divides the graph's char poly",
            qm.char_poly()
        );
    }
}
