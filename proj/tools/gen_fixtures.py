#!/usr/bin/env python3
"""Regenerates the starter lexicon, the fixture scene, and the embedded
copies in include/lokatif/builtin_data.hpp. Run from the repo root."""

import json
import os

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def view(top="material", sub="object", fix=False, esp=False, route=None):
    v = {"top": top}
    if top == "material":
        v["material_sub"] = sub
    if route:
        v["route_sub"] = route
    v["fix"] = fix
    v["esp"] = esp
    return v


OBJ_FF = [view(fix=False, esp=False)]
OBJ_TF = [view(fix=True, esp=False)]
PLACE = [view(sub="place", fix=True, esp=True)]

LEXICON = [
    {"lemma": "max", "proper": True, "views": OBJ_FF},
    {"lemma": "jean", "proper": True, "views": OBJ_FF},
    {"lemma": "personne", "proper": False, "views": OBJ_FF},
    {"lemma": "toulouse", "proper": True, "views": PLACE},
    {"lemma": "jardin public", "proper": False, "views": PLACE},
    {"lemma": "pré", "proper": False, "views": PLACE},
    {"lemma": "sentier", "proper": False,
     "views": [view(sub="place", fix=True, esp=True, route="path")]},
    {"lemma": "rocher", "proper": False, "views": OBJ_TF},
    {"lemma": "table", "proper": False, "views": OBJ_TF},
    {"lemma": "verre", "proper": False, "views": [view(fix=False, esp=True)]},
    {"lemma": "couteau", "proper": False, "views": OBJ_FF},
    {"lemma": "mouche", "proper": False, "views": OBJ_FF},
    {"lemma": "oiseau", "proper": False, "views": OBJ_FF},
    {"lemma": "église", "proper": False, "views": PLACE + OBJ_TF},
    {"lemma": "maison", "proper": False, "views": PLACE + OBJ_TF},
    {"lemma": "porte", "proper": False,
     "views": [view(fix=True, esp=False, route="conduit")],
     "component_function": "access"},
    {"lemma": "poignée", "proper": False, "views": OBJ_TF,
     "component_function": "grasping"},
    {"lemma": "anse", "proper": False, "views": OBJ_TF,
     "component_function": "grasping"},
    {"lemma": "main", "proper": False, "views": OBJ_TF,
     "component_function": "manipulation"},
    {"lemma": "extrémité", "proper": False, "views": PLACE, "nli_rule": "end"},
    {"lemma": "haut", "proper": False, "views": PLACE, "nli_rule": "top"},
    {"lemma": "dessus", "proper": False, "views": PLACE, "nli_rule": "top"},
    {"lemma": "coin", "proper": False, "views": PLACE, "nli_rule": "corner"},
    {"lemma": "fond", "proper": False, "views": PLACE, "nli_rule": "interior"},
    {"lemma": "pied", "proper": False, "views": PLACE, "nli_rule": "bottom"},
    {"lemma": "avant", "proper": False, "views": PLACE, "nli_rule": "front"},
    {"lemma": "arrière", "proper": False, "views": PLACE, "nli_rule": "back"},
    {"lemma": "gauche", "proper": False, "views": PLACE, "nli_rule": "left"},
    {"lemma": "droite", "proper": False, "views": PLACE, "nli_rule": "right"},
    {"lemma": "gâteau", "proper": False, "views": OBJ_FF},
    {"lemma": "farine", "proper": False,
     "views": [{"top": "substance", "fix": False, "esp": False}]},
    {"lemma": "part", "proper": False,
     "views": [view(sub="matter_portion", fix=False, esp=False)]},
    {"lemma": "morceau", "proper": False,
     "views": [view(sub="matter_portion", fix=False, esp=False)]},
    {"lemma": "tasse", "proper": False, "views": OBJ_FF},
    {"lemma": "brebis", "proper": False, "views": OBJ_FF},
    {"lemma": "troupeau", "proper": False, "views": OBJ_FF},
    {"lemma": "ferme", "proper": False, "views": OBJ_FF},
    {"lemma": "couple", "proper": False, "views": OBJ_FF},
    {"lemma": "gagnants", "proper": False, "views": OBJ_FF},
    {"lemma": "fête", "proper": False,
     "views": [{"top": "eventuality", "fix": False, "esp": False}]},
    {"lemma": "voiture", "proper": False, "views": OBJ_FF},
    {"lemma": "armoire", "proper": False, "views": OBJ_TF},
    {"lemma": "lustre", "proper": False, "views": OBJ_FF},
    {"lemma": "tapis", "proper": False, "views": OBJ_TF},
    {"lemma": "lampadaire", "proper": False, "views": OBJ_TF},
]


def box(lo, hi):
    return [[x, y, z]
            for x in range(lo[0], hi[0] + 1)
            for y in range(lo[1], hi[1] + 1)
            for z in range(lo[2], hi[2] + 1)]


TABLE = box((0, 0, 0), (5, 3, 2))
TABLE_END = box((4, 0, 0), (5, 3, 2))
PRE = box((20, 0, 0), (27, 7, 0))
MAISON = box((40, 0, 0), (44, 3, 3))
PORTE = box((40, 1, 0), (40, 2, 2))
GATEAU = box((60, 0, 0), (63, 3, 2))
PART = box((60, 0, 0), (60, 3, 2))
TASSE = box((66, 0, 0), (68, 2, 2))
MORCEAU = box((66, 0, 0), (66, 0, 2))
VOITURE = box((80, 0, 0), (85, 2, 2))
ARMOIRE = box((90, 0, 0), (93, 3, 5))

SHEEP = {f"brebis{i}": [[69 + i, 0, 0]] for i in (1, 2, 3, 4)}
PERSONS = {"dupont_a": [[74, 6, 0]], "dupont_b": [[75, 6, 0]],
           "martin": [[76, 6, 0]]}

SCENE = [
    {"id": "table1", "lemma": "table",
     "extent": {"0": TABLE, "1": TABLE, "2": TABLE}},
    {"id": "extremite1", "lemma": "extrémité",
     "extent": {"0": TABLE_END, "1": TABLE_END, "2": TABLE_END}},
    {"id": "mouche1", "lemma": "mouche",
     "extent": {"0": [[10, 10, 1]], "1": [[11, 10, 1]], "2": [[12, 10, 1]]}},
    {"id": "pre1", "lemma": "pré", "extent": {"0": PRE}},
    {"id": "oiseau1", "lemma": "oiseau", "extent": {"0": [[23, 3, 3]]}},
    {"id": "verre1", "lemma": "verre",
     "extent": {"0": box((14, 0, 0), (14, 0, 1))}},
    {"id": "couteau1", "lemma": "couteau",
     "extent": {"0": box((16, 0, 0), (17, 0, 0))}},
    {"id": "rocher1", "lemma": "rocher",
     "extent": {"0": box((30, 0, 0), (32, 2, 1))}},
    {"id": "maison1", "lemma": "maison", "extent": {"0": MAISON},
     "dependence": [{"on": "porte1", "genericity": "generic",
                     "kind": "functional"}]},
    {"id": "porte1", "lemma": "porte", "extent": {"0": PORTE},
     "dependence": [{"on": "poignee1", "genericity": "generic",
                     "kind": "functional"}]},
    {"id": "poignee1", "lemma": "poignée", "extent": {"0": [[40, 2, 1]]}},
    {"id": "jean1", "lemma": "jean",
     "extent": {"0": box((50, 0, 0), (50, 0, 2))}},
    {"id": "main1", "lemma": "main", "extent": {"0": [[50, 0, 1]]},
     "dependence": [{"on": "jean1", "genericity": "individual",
                     "kind": "functional"}]},
    {"id": "gateau1", "lemma": "gâteau", "extent": {"0": GATEAU},
     "made_of": "farine1"},
    {"id": "farine1", "lemma": "farine", "extent": {"0": GATEAU}},
    {"id": "part1", "lemma": "part", "extent": {"0": PART},
     "portions": [{"whole": "gateau1", "mode": "conventional"}]},
    {"id": "tasse1", "lemma": "tasse", "extent": {"0": TASSE}},
    {"id": "morceau1", "lemma": "morceau", "extent": {"0": MORCEAU},
     "portions": [{"whole": "tasse1", "mode": "piece"}]},
] + [
    {"id": sid, "lemma": "brebis", "extent": {"0": ext}}
    for sid, ext in SHEEP.items()
] + [
    {"id": "troupeau1", "lemma": "troupeau", "plurality": "collection",
     "members": ["brebis1", "brebis2", "brebis3"],
     "extent": {"0": SHEEP["brebis1"] + SHEEP["brebis2"] + SHEEP["brebis3"]}},
    {"id": "ferme1", "lemma": "ferme", "plurality": "collection",
     "members": ["brebis1", "brebis2", "brebis3", "brebis4"],
     "extent": {"0": sum(SHEEP.values(), [])}},
] + [
    {"id": pid, "lemma": "personne", "extent": {"0": ext}}
    for pid, ext in PERSONS.items()
] + [
    {"id": "couple1", "lemma": "couple", "plurality": "collection",
     "members": ["dupont_a", "dupont_b"],
     "extent": {"0": PERSONS["dupont_a"] + PERSONS["dupont_b"]}},
    {"id": "gagnants1", "lemma": "gagnants", "plurality": "collection",
     "members": ["dupont_a", "dupont_b", "martin"],
     "extent": {"0": sum(PERSONS.values(), [])}},
    {"id": "fete1", "lemma": "fête"},
    {"id": "voiture1", "lemma": "voiture", "extent": {"0": VOITURE},
     "orientation": {"motion_front": "+x", "function_front": "-x",
                     "elongation_axis": "x", "aerodynamic_front": "-x"}},
    {"id": "armoire1", "lemma": "armoire", "extent": {"0": ARMOIRE}},
    {"id": "lustre1", "lemma": "lustre", "extent": {"0": [[91, 1, 8]]}},
]


def main():
    lex_text = json.dumps(LEXICON, ensure_ascii=False, indent=1) + "\n"
    scene_text = json.dumps(SCENE, ensure_ascii=False, indent=1) + "\n"
    os.makedirs(os.path.join(ROOT, "data"), exist_ok=True)
    with open(os.path.join(ROOT, "data", "lexicon.json"), "w") as f:
        f.write(lex_text)
    with open(os.path.join(ROOT, "data", "scene.json"), "w") as f:
        f.write(scene_text)

    header = (
        "#pragma once\n\n"
        "// Embedded copies of data/lexicon.json and data/scene.json, used by\n"
        "// the `selftest` subcommand. Regenerate with tools/gen_fixtures.py.\n\n"
        "namespace lokatif::builtin {\n\n"
        'inline const char* kLexiconJson = R"lok(' + lex_text + ')lok";\n\n'
        'inline const char* kSceneJson = R"lok(' + scene_text + ')lok";\n\n'
        "}  // namespace lokatif::builtin\n")
    with open(os.path.join(ROOT, "include", "lokatif", "builtin_data.hpp"),
              "w") as f:
        f.write(header)
    print("wrote data/lexicon.json data/scene.json "
          "include/lokatif/builtin_data.hpp")


if __name__ == "__main__":
    main()
