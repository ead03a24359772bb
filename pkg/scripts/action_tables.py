"""Print induced action tables v^m -| X for both Galilei models.

    python3 scripts/action_tables.py --order 6 --m-max 3 --truncate 3
    python3 scripts/action_tables.py --records > tables.jsonl
"""

import argparse
import json
from dataclasses import dataclass

from qinduce import induce


@dataclass
class TableConfig:
    order: int = 6
    m_max: int = 3
    truncate: int = 3
    records: bool = False
    classical: bool = False


def main(cfg: TableConfig) -> None:
    for tag in induce.MODELS:
        model = induce.load_model(tag, cfg.truncate)
        table = induce.action_table(model, cfg.order, cfg.m_max)
        if cfg.classical:
            table = table.substitute(model.alphabet.deform, 0)
        if cfg.records:
            for rec in table.records():
                print(json.dumps(rec))
            continue
        print(f"== {tag} model ({model.pres.name}, truncation {cfg.truncate}, v-order {cfg.order})")
        for (g, m), v in sorted(table.entries.items(), key=lambda kv: (kv[0][1], model.pres.rank[kv[0][0]])):
            print(f"  v^{m} -| {g} = {v.canonical()}")
        print()


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--truncate", type=int, default=3)
    p.add_argument("--records", action="store_true")
    p.add_argument("--classical", action="store_true", help="set the deformation parameter to 0")
    main(TableConfig(**vars(p.parse_args())))
