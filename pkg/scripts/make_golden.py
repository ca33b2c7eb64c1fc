"""Regenerate the files under golden/ from the builders in proofkit.corpus."""
from pathlib import Path

from proofkit.calculi.io import dump_derivation
from proofkit.corpus import GOLDEN_FORMULAS, detour_sites, golden_nd, imp_dneg, inject_detour, slt_excluded_middle
from proofkit.natded.io import dump_nd


def golden_files() -> dict[str, str]:
    files = {f"{name}.nd": dump_nd(d) for name, d in golden_nd().items()}
    d = imp_dneg()
    files["detour1.nd"] = dump_nd(inject_detour(d, "imp", detour_sites(d, "imp")[0]))
    files["excluded_middle.slt"] = dump_derivation(slt_excluded_middle())
    # an init whose succedent is missing from its antecedent
    files["malformed.slt"] = files["excluded_middle.slt"].replace('(seq ("p") => "p")', '(seq ("q") => "p")')
    files["golden.fml"] = "".join(f + "\n" for f in GOLDEN_FORMULAS)
    return files


if __name__ == "__main__":
    out = Path(__file__).resolve().parent.parent / "golden"
    out.mkdir(exist_ok=True)
    for name, text in golden_files().items():
        (out / name).write_text(text, encoding="utf-8")
