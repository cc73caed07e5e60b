pub mod cli;
pub mod exactnum;
pub mod exterior;
pub mod geometry;
pub mod golden;
pub mod grassmann;
pub mod liegroups;
pub mod octonion;
pub mod report;
pub mod suites;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-numbers.md")]
    mod exact_numbers {}
    #[doc = include_str!("../../../book/src/octonions.md")]
    mod octonions {}
    #[doc = include_str!("../../../book/src/forms.md")]
    mod forms {}
    #[doc = include_str!("../../../book/src/grassmannian.md")]
    mod grassmannian {}
    #[doc = include_str!("../../../book/src/torus.md")]
    mod torus {}
    #[doc = include_str!("../../../book/src/fixed-points.md")]
    mod fixed_points {}
    #[doc = include_str!("../../../book/src/tangent-weights.md")]
    mod tangent_weights {}
    #[doc = include_str!("../../../book/src/g2.md")]
    mod g2 {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
