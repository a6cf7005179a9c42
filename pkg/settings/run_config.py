from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional


class Provenance(Enum):
    PAIR = "pair"
    CYCLE = "cycle"
    PATCH = "patch"
    SEARCH = "search"
    FILE = "file"


class Method(Enum):
    GENERAL = "general"
    CYCLE = "cycle"
    COMPOSE = "compose"
    MIN_EDGE = "min-edge"


class VerifyMode(Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


class ReportFormat(Enum):
    KV = "kv"
    JSON = "json"


class Subcommand(Enum):
    CONSTRUCT = "construct"
    VERIFY = "verify"
    BOUNDS = "bounds"
    EXACT = "exact"
    PIVOT = "pivot"
    TABLE = "table"


@dataclass
class Budget:
    nodes: Optional[int] = None
    seconds: Optional[float] = None
    max_k: Optional[int] = None


@dataclass
class RunConfig:
    """Parameters of one CLI invocation, checked before anything is dispatched"""
    subcommand: Subcommand
    n: Optional[int] = None
    d: Optional[int] = None
    k: Optional[int] = None
    method: Method = Method.GENERAL
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None
    hypergraph_path: Optional[Path] = None
    mode: VerifyMode = VerifyMode.EXHAUSTIVE
    sample_count: Optional[int] = None
    seed: int = 0
    budget: Budget = field(default_factory=Budget)
    report_format: ReportFormat = ReportFormat.KV

    def validate(self) -> "RunConfig":
        if self.subcommand in (Subcommand.CONSTRUCT, Subcommand.BOUNDS, Subcommand.EXACT):
            if self.n is None or self.d is None:
                raise ValueError(f"{self.subcommand.value} needs both --n and --d")
            if self.n < 2:
                raise ValueError(f"n must be at least 2, got n={self.n}")
            upper = self.n - 1 if self.subcommand is Subcommand.CONSTRUCT else self.n
            if not 2 <= self.d <= upper:
                raise ValueError(f"d must lie in [2, {upper}] for {self.subcommand.value}, got d={self.d}")

        if self.subcommand is Subcommand.CONSTRUCT:
            if self.method is Method.CYCLE and self.n != self.d + 1:
                raise ValueError(f"method cycle builds n = d+1 only, got n={self.n}, d={self.d}")
            if self.method is Method.MIN_EDGE:
                if self.k is None:
                    raise ValueError("method min-edge needs --k")
                if (self.d - 1) * self.k <= self.n - 1:
                    raise ValueError(f"min-edge requires (d-1)k > n-1, got d={self.d}, k={self.k}, n={self.n}")

        if self.subcommand is Subcommand.PIVOT and (self.n is None or self.n < 3 or self.n % 2 == 0):
            raise ValueError(f"pivot needs an odd n >= 3, got n={self.n}")

        if self.mode is VerifyMode.SAMPLED and (self.sample_count is None or self.sample_count < 1):
            raise ValueError(f"sampled verification needs a positive sample count, got {self.sample_count}")

        for name in ("nodes", "seconds", "max_k"):
            value = getattr(self.budget, name)
            if value is not None and value <= 0:
                raise ValueError(f"budget {name} must be positive, got {value}")
        return self
