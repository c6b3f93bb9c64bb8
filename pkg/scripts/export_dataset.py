#!/usr/bin/env python3
"""Export the embedded degree dataset and prove the JSON round-trips.

Usage:
    python scripts/export_dataset.py /tmp/snpd-data
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from snpd import atlas_data


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("destination", help="directory to write dataset.json and csv/ into")
    args = parser.parse_args()

    dest = Path(args.destination)
    dest.mkdir(parents=True, exist_ok=True)
    json_path = dest / "dataset.json"
    atlas_data.export_data("json", json_path)
    atlas_data.export_data("csv", dest / "csv")

    reloaded = atlas_data.load_json(json_path)
    if reloaded != atlas_data.dataset_dict():
        print("round-trip mismatch", file=sys.stderr)
        return 1

    for key, entries in reloaded.items():
        print(f"{key}: {len(entries)} records")
    print(f"wrote {json_path} and {dest / 'csv'}; JSON round-trip verified")
    return 0


if __name__ == "__main__":
    sys.exit(main())
