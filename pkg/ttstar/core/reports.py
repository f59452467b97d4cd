"""Identity checks and their reports"""

from dataclasses import dataclass, field


IDENTITY_TOL = 1e-12


@dataclass(frozen=True)
class IdentityCheck:
    """Single identity with its max-entry residual"""

    name: str
    residual: float
    tolerance: float = IDENTITY_TOL

    @property
    def passed(self) -> bool:
        """Residual is within tolerance"""
        return self.residual <= self.tolerance

    def describe(self) -> dict:
        """Returns check as dict"""
        return {
            'name': self.name,
            'residual': self.residual,
            'tolerance': self.tolerance,
            'passed': self.passed}


@dataclass
class IdentityReport:
    """List of identity checks for one case"""

    title: str
    case: str
    checks: list[IdentityCheck] = field(default_factory=list)

    def add(self, name: str, residual: float, tolerance: float = IDENTITY_TOL) -> None:
        """Appends a check"""
        self.checks.append(
            IdentityCheck(name=name, residual=float(residual), tolerance=tolerance))

    def extend(self, other: 'IdentityReport') -> None:
        """Appends all checks of other report"""
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        """All checks passed"""
        return all(check.passed for check in self.checks)

    @property
    def max_residual(self) -> float:
        """Largest residual among the checks"""
        return max((check.residual for check in self.checks), default=0.0)

    def failures(self) -> list[IdentityCheck]:
        """Returns failed checks"""
        return [check for check in self.checks if not check.passed]

    def __getitem__(self, name: str) -> IdentityCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def __len__(self):
        return len(self.checks)

    def describe(self) -> dict:
        """Returns report as dict"""
        return {
            'title': self.title,
            'case': self.case,
            'passed': self.passed,
            'max_residual': self.max_residual,
            'checks': [check.describe() for check in self.checks]}

    def __repr__(self):
        status = 'passed' if self.passed else f'{len(self.failures())} failed'
        return f'{self.title} for case {self.case}: {len(self.checks)} checks, {status}'
