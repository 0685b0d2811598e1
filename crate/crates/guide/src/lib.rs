//! The chapters of the guide in `book/`, compiled as doctests so the
//! listings cannot drift from the library.

pub use hurwitz_weyl;

macro_rules! chapter {
    ($name:ident, $file:literal) => {
        #[doc = include_str!(concat!("../../../book/src/", $file))]
        pub mod $name {}
    };
}

chapter!(intro, "intro.md");
chapter!(root_systems, "root-systems.md");
chapter!(weyl_groups, "weyl-groups.md");
chapter!(hurwitz_systems, "hurwitz-systems.md");
chapter!(lemmas, "lemmas.md");
chapter!(nielsen, "nielsen.md");
chapter!(normal_form, "normal-form.md");
chapter!(orbits, "orbits.md");
chapter!(cli, "cli.md");
