#!/usr/bin/env python3
"""Regenerate the JSON files in fixtures/ from the in-code constructors."""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from plabic import fixtures  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def main():
    OUT.mkdir(exist_ok=True)
    for name, fn in sorted(fixtures.ALL_NAMED.items()):
        g = fn()
        path = OUT / f"{name}.json"
        path.write_text(json.dumps(g.to_json_obj(), sort_keys=True, indent=1) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
