use std::fmt;
use std::str::FromStr;

/// Variable families. The declaration order is the global sort order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    X,
    Y,
    Xbar,
    Ybar,
    Z,
}

impl VarKind {
    pub fn name(self) -> &'static str {
        match self {
            VarKind::X => "X",
            VarKind::Y => "Y",
            VarKind::Xbar => "Xbar",
            VarKind::Ybar => "Ybar",
            VarKind::Z => "Z",
        }
    }

    /// Complex-conjugate partner; `Z` is real.
    pub fn conj(self) -> VarKind {
        match self {
            VarKind::X => VarKind::Xbar,
            VarKind::Xbar => VarKind::X,
            VarKind::Y => VarKind::Ybar,
            VarKind::Ybar => VarKind::Y,
            VarKind::Z => VarKind::Z,
        }
    }

    /// Whether the row index runs over the positive part (`≤ p`).
    pub fn is_x_like(self) -> bool {
        matches!(self, VarKind::X | VarKind::Xbar)
    }
}

impl FromStr for VarKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "X" => Ok(VarKind::X),
            "Y" => Ok(VarKind::Y),
            "Xbar" => Ok(VarKind::Xbar),
            "Ybar" => Ok(VarKind::Ybar),
            "Z" => Ok(VarKind::Z),
            other => Err(format!("unknown variable kind `{other}`")),
        }
    }
}

/// A polynomial variable. Field order gives the `(kind, col, row)` ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableId {
    pub kind: VarKind,
    pub col: u16,
    pub row: u16,
}

impl VariableId {
    pub fn new(kind: VarKind, row: u16, col: u16) -> Self {
        VariableId { kind, col, row }
    }

    pub fn x(row: u16, col: u16) -> Self {
        VariableId::new(VarKind::X, row, col)
    }

    pub fn y(row: u16, col: u16) -> Self {
        VariableId::new(VarKind::Y, row, col)
    }

    pub fn xbar(row: u16, col: u16) -> Self {
        VariableId::new(VarKind::Xbar, row, col)
    }

    pub fn ybar(row: u16, col: u16) -> Self {
        VariableId::new(VarKind::Ybar, row, col)
    }

    /// Coordinate `z_j` / `x_j` of a flat `N`-dimensional model.
    pub fn z(j: u16) -> Self {
        VariableId::new(VarKind::Z, j, 1)
    }

    pub fn conj(self) -> Self {
        VariableId { kind: self.kind.conj(), ..self }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.kind.name(), self.row, self.col)
    }
}

impl FromStr for VariableId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("malformed variable `{s}`"));
        }
        let kind = parts[0].parse()?;
        let row = parts[1].parse::<u16>().map_err(|e| format!("{s}: {e}"))?;
        let col = parts[2].parse::<u16>().map_err(|e| format!("{s}: {e}"))?;
        if row == 0 || col == 0 {
            return Err(format!("indices are 1-based in `{s}`"));
        }
        Ok(VariableId::new(kind, row, col))
    }
}
