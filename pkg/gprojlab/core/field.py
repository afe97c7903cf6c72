from __future__ import annotations

from functools import lru_cache
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import GF, QQ, isprime


@lru_cache(maxsize=None)
def _prime_domain(p: int):
    return GF(p)


class BaseField(BaseModel):
    """Ground field descriptor: exact rationals or a prime field Z/p."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["rational", "prime"] = "rational"
    p: Optional[int] = None

    @model_validator(mode="after")
    def _check_prime(self) -> "BaseField":
        if self.kind == "prime":
            if self.p is None or not isprime(self.p):
                raise ValueError(f"prime field needs a prime characteristic, got {self.p}")
        elif self.p is not None:
            raise ValueError("rational field takes no characteristic")
        return self

    @classmethod
    def rational(cls) -> "BaseField":
        return cls()

    @classmethod
    def prime(cls, p: int) -> "BaseField":
        return cls(kind="prime", p=p)

    @property
    def domain(self):
        if self.kind == "prime":
            return _prime_domain(int(self.p))  # type: ignore[arg-type]
        return QQ

    @property
    def characteristic(self) -> int:
        return int(self.p) if self.kind == "prime" else 0

    def scalar(self, numerator: int, denominator: int = 1) -> Any:
        K = self.domain
        if denominator == 0:
            raise ValueError("zero denominator")
        if self.kind == "prime" and denominator % int(self.p) == 0:  # type: ignore[operator]
            raise ValueError(f"denominator {denominator} vanishes mod {self.p}")
        return K(numerator) / K(denominator)

    def format(self, x: Any) -> str:
        K = self.domain
        if self.kind == "prime":
            return str(K.to_int(x) % int(self.p))  # type: ignore[arg-type]
        num, den = K.numer(x), K.denom(x)
        return str(num) if den == 1 else f"{num}/{den}"

    def label(self) -> str:
        return "rat" if self.kind == "rational" else f"p={self.p}"
