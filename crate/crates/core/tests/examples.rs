//! Runs every program in `examples/` so they stay in sync with the library.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        #[path = $file]
        mod $name;

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(baskets, "../examples/baskets.rs");
example!(riemann_roch, "../examples/riemann_roch.rs");
example!(index_search, "../examples/index_search.rs");
example!(index_two_search, "../examples/index_two_search.rs");
example!(pfaffian_format, "../examples/pfaffian_format.rs");
example!(sarkisov_chain, "../examples/sarkisov_chain.rs");
