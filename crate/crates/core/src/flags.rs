use bitflags::bitflags;

bitflags! {
    /// Non-fatal conditions raised while evaluating a value.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
    pub struct Warnings: u8 {
        /// Optimal truncation ran with too few decaying shells for the error
        /// estimate to mean much.
        const NOT_IN_ASYMPTOTIC_REGIME = 1 << 0;
        /// An exponential over- or underflowed; the value is saturated.
        const OVERFLOW_SATURATION = 1 << 1;
        /// A factor was evaluated on the upper side of a branch cut, or with
        /// principal powers where the intended branch is not determined.
        const BRANCH_SENSITIVE = 1 << 2;
    }
}

impl Warnings {
    /// Short labels, `|`-separated, in bit order. Empty when no flag is set.
    pub fn labels(self) -> String {
        let mut out = Vec::new();
        if self.contains(Self::NOT_IN_ASYMPTOTIC_REGIME) {
            out.push("not-in-asymptotic-regime");
        }
        if self.contains(Self::OVERFLOW_SATURATION) {
            out.push("overflow-saturation");
        }
        if self.contains(Self::BRANCH_SENSITIVE) {
            out.push("branch-sensitive");
        }
        out.join("|")
    }
}

/// A value together with the warnings raised while computing it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Flagged<V> {
    pub value: V,
    pub flags: Warnings,
}

impl<V> Flagged<V> {
    pub fn clean(value: V) -> Self {
        Self {
            value,
            flags: Warnings::empty(),
        }
    }

    pub fn new(value: V, flags: Warnings) -> Self {
        Self { value, flags }
    }

    /// Moves the flags into `acc` and returns the bare value.
    #[inline]
    pub fn record(self, acc: &mut Warnings) -> V {
        *acc |= self.flags;
        self.value
    }

    pub fn map<U>(self, f: impl FnOnce(V) -> U) -> Flagged<U> {
        Flagged {
            value: f(self.value),
            flags: self.flags,
        }
    }
}
