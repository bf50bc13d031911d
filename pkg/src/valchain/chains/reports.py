from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass" | "fail" | "info"
    detail: str = ""
    witness: str | None = None

    def to_json(self):
        out = {"name": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    summary: str = ""

    def add(self, name: str, ok: bool, detail: str = "", witness=None) -> bool:
        self.checks.append(
            Check(name, "pass" if ok else "fail", detail, None if witness is None else str(witness))
        )
        return ok

    def info(self, name: str, detail: str):
        self.checks.append(Check(name, "info", detail))

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.detail, c.witness))

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status == "fail"]

    def first_witness(self):
        for c in self.checks:
            if c.status == "fail" and c.witness is not None:
                return c.witness
        return None

    def to_json(self):
        return {
            "title": self.title,
            "status": "pass" if self.ok else "fail",
            "checks": [c.to_json() for c in self.checks],
            **({"summary": self.summary} if self.summary else {}),
        }

    def text_lines(self):
        yield f"== {self.title}"
        for c in self.checks:
            line = f"[{c.status.upper()}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            if c.witness is not None:
                line += f" (witness {c.witness})"
            yield line
        tail = f": {self.summary}" if self.summary else ""
        yield f"== {'PASS' if self.ok else 'FAIL'}{tail}"

    def to_text(self) -> str:
        return "\n".join(self.text_lines()) + "\n"
