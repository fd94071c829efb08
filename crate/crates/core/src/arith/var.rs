//! Indeterminate tags.
//!
//! Each polynomial carries its variable in its type, so combining a
//! polynomial in `b` with one in `x` does not compile. Renaming a variable
//! is always an explicit call ([`super::Poly::retag`] or
//! [`super::Poly::substitute_affine`]).

use std::fmt::Debug;

pub trait Indeterminate: Debug + Copy + Default + Send + Sync + 'static {
    const NAME: &'static str;
}

macro_rules! indeterminate {
    ($(#[$m:meta])* $ty:ident => $name:literal) => {
        $(#[$m])*
        #[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $ty;

        impl Indeterminate for $ty {
            const NAME: &'static str = $name;
        }
    };
}

indeterminate!(
    /// Nonorientability parameter `b = α - 1`.
    B => "b"
);
indeterminate!(
    /// Face marker.
    X => "x"
);
indeterminate!(
    /// Matrix size.
    N => "N"
);
indeterminate!(T => "t");
indeterminate!(Z => "z");
indeterminate!(
    /// Jack parameter.
    Alpha => "alpha"
);
indeterminate!(
    /// `1/γ`.
    InvGamma => "1/gamma"
);
