//! Exact spectrum factorization next to the numeric Jacobi cross-check.
//!
//! ```sh
//! cargo run --release --example exact_spectrum
//! ```

use speccat::families::{build_family, FamilyDescriptor};
use speccat::graph::Graph;
use speccat::jacobi::{eigenvalues_symmetric, DEFAULT_JACOBI_TOL};
use speccat::spectral::exact_spectrum;

fn show(name: &str, g: &Graph) {
    let s = exact_spectrum(g);
    let numeric = eigenvalues_symmetric(&g.adjacency_matrix(), DEFAULT_JACOBI_TOL).unwrap();
    let worst = s
        .eigenvalues_f64()
        .iter()
        .zip(&numeric)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    println!(
        "{name:<14} (x-2)^{} (x+1)^{} ({})   numeric gap {:.1e}",
        s.mult_two, s.mult_minus_one, s.residual, worst
    );
}

fn main() {
    show("K3", &Graph::triangle());
    show("K5", &Graph::complete(5));
    show("C4", &Graph::cycle(4));
    show("star K(1,5)", &Graph::star(5));
    show("3K3", &Graph::triangle().pad_with_triangles(2));
    for text in ["I(a=1,k=2)", "II(k=3,l=2)", "III(m=4)", "VIII(a=4,k=10)"] {
        let desc: FamilyDescriptor = text.parse().unwrap();
        show(text, &build_family(&desc).unwrap());
    }
}
