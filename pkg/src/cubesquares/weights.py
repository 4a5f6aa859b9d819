"""Weighted supports of T(y) = y1^3 + y2^3 + y3^3 over the two cube families.

Role "a" (bulk): y1 in (P/2, P], y2, y3 R-smooth in [1, P].
Role "b" (thin): y1 in (H1, H2], y2, y3 R-smooth in [1, floor(H3)].

The table maps each attained value v = T(y) to its multiplicity, i.e. the
number of ordered triples producing it.  These multiplicities are the
coefficients of the quadratic generating sums evaluated in generating.py.

Disk formats: a little-endian binary record (magic WCL1) and a CSV with
header ``value,multiplicity``; a JSON sidecar carries provenance fields.
"""

from __future__ import annotations

import hashlib
import json
import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .cubesieve import CapacityError, memory_budget
from .params import Params
from .smooth import enumerate_smooth

MAGIC = b"WCL1"


@dataclass
class WeightTable:
    """Sorted support + positive multiplicities for one role."""

    role: str
    support: np.ndarray = field(repr=False)
    counts: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.support = np.asarray(self.support, dtype=np.int64)
        self.counts = np.asarray(self.counts, dtype=np.int64)
        if self.support.shape != self.counts.shape:
            raise ValueError("support and counts must be parallel")
        if self.support.size and (np.diff(self.support) <= 0).any():
            raise ValueError("support must be strictly increasing")
        if (self.counts <= 0).any():
            raise ValueError("multiplicities must be positive")

    @property
    def total(self) -> int:
        """Total mass = number of ordered triples = value of the sum at 0."""
        return int(self.counts.sum())

    def __len__(self) -> int:
        return int(self.support.size)

    def multiplicity(self, v: int) -> int:
        i = int(np.searchsorted(self.support, v))
        if i < self.support.size and int(self.support[i]) == v:
            return int(self.counts[i])
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.support.tolist(), self.counts.tolist()))


def _aggregate(values: np.ndarray, weights: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    sup, inv = np.unique(values, return_inverse=True)
    acc = np.zeros(sup.size, dtype=np.int64)
    np.add.at(acc, inv.ravel(), weights.ravel())
    return sup, acc


def build_weight_table(params: Params, role: str, budget: int | None = None) -> WeightTable:
    """Aggregate T over the requested family into value -> multiplicity.

    The two smooth coordinates are folded first (pair-sum support with
    counts), then crossed with the leading cube range, which keeps the
    intermediate at |leading| * |pair support| instead of |leading| * |smooth|^2.
    """
    if role not in ("a", "b"):
        raise ValueError(f"role must be 'a' or 'b', got {role!r}")
    if budget is None:
        budget = memory_budget()
    if role == "a":
        leading = params.leading_range_main()
        box = params.P
    else:
        leading = params.leading_range_thin()
        box = int(np.floor(params.H3))
    y1 = np.arange(leading.start, leading.stop, dtype=np.int64)
    if y1.size == 0 or box < 1:
        return WeightTable(role=role, support=np.empty(0, np.int64), counts=np.empty(0, np.int64))

    smooth = enumerate_smooth(box, params.R).members
    c = smooth**3
    pair_sup, pair_cnt = _aggregate(c[:, None] + c[None, :], np.ones((c.size, c.size), np.int64))

    need = y1.size * pair_sup.size * 24
    if need > budget:
        raise CapacityError(
            f"weight table role={role} needs ~{need} bytes (|leading|={y1.size}, "
            f"|pairs|={pair_sup.size}) > budget {budget}"
        )
    vals = (y1**3)[:, None] + pair_sup[None, :]
    wts = np.broadcast_to(pair_cnt[None, :], vals.shape)
    sup, cnt = _aggregate(vals, wts)
    return WeightTable(role=role, support=sup, counts=cnt)


# -- serialization -----------------------------------------------------------


def table_digest(table: WeightTable) -> str:
    h = hashlib.sha256()
    h.update(table.role.encode())
    h.update(table.support.tobytes())
    h.update(table.counts.tobytes())
    return h.hexdigest()[:16]


def save_binary(table: WeightTable, path: str | Path, meta: dict | None = None) -> None:
    """MAGIC, role byte, u64 pair count, then (u64 value, u64 count) pairs."""
    path = Path(path)
    with open(path, "wb") as f:
        f.write(MAGIC)
        f.write(table.role.encode("ascii"))
        f.write(struct.pack("<Q", len(table)))
        body = np.empty((len(table), 2), dtype="<u8")
        body[:, 0] = table.support
        body[:, 1] = table.counts
        f.write(body.tobytes())
    sidecar = {"format": "WCL1", "role": table.role, "pairs": len(table), "digest": table_digest(table)}
    sidecar.update(meta or {})
    path.with_suffix(path.suffix + ".meta.json").write_text(json.dumps(sidecar, indent=2))


def load_binary(path: str | Path) -> WeightTable:
    raw = Path(path).read_bytes()
    if raw[:4] != MAGIC:
        raise ValueError(f"bad magic {raw[:4]!r}")
    role = raw[4:5].decode("ascii")
    (npairs,) = struct.unpack_from("<Q", raw, 5)
    body = np.frombuffer(raw, dtype="<u8", count=2 * npairs, offset=13).reshape(npairs, 2)
    return WeightTable(role=role, support=body[:, 0].astype(np.int64), counts=body[:, 1].astype(np.int64))


def save_csv(table: WeightTable, path: str | Path) -> None:
    with open(path, "w") as f:
        f.write("value,multiplicity\n")
        for v, c in zip(table.support.tolist(), table.counts.tolist()):
            f.write(f"{v},{c}\n")


def load_csv(path: str | Path, role: str = "a") -> WeightTable:
    values, counts = [], []
    with open(path) as f:
        header = f.readline().strip()
        if header != "value,multiplicity":
            raise ValueError(f"bad CSV header {header!r}")
        for line in f:
            if not line.strip():
                continue
            v, c = line.split(",")
            values.append(int(v))
            counts.append(int(c))
    return WeightTable(role=role, support=np.array(values, np.int64), counts=np.array(counts, np.int64))
