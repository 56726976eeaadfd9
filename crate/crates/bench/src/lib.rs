//! Inputs shared by the benchmarks.

use brauer_core::{DiagramSpec, RootSystem};

/// Root systems in increasing size.
pub const SPECS: &[&str] = &["A5", "D6", "E6", "E7", "E8"];

pub fn system(spec: &str) -> RootSystem {
    let spec: DiagramSpec = spec.parse().expect("benchmark spec");
    RootSystem::new(spec)
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_build() {
        let sizes: Vec<usize> = super::SPECS.iter().map(|s| super::system(s).len()).collect();
        assert_eq!(sizes, vec![15, 30, 36, 63, 120]);
    }
}
