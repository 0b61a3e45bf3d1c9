#pragma once

// Embedded copies of data/lexicon.json and data/scene.json, used by
// the `selftest` subcommand. Regenerate with tools/gen_fixtures.py.

namespace lokatif::builtin {

inline const char* kLexiconJson = R"lok([
 {
  "lemma": "max",
  "proper": true,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "jean",
  "proper": true,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "personne",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "toulouse",
  "proper": true,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ]
 },
 {
  "lemma": "jardin public",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ]
 },
 {
  "lemma": "pré",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ]
 },
 {
  "lemma": "sentier",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "route_sub": "path",
    "fix": true,
    "esp": true
   }
  ]
 },
 {
  "lemma": "rocher",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": true,
    "esp": false
   }
  ]
 },
 {
  "lemma": "table",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": true,
    "esp": false
   }
  ]
 },
 {
  "lemma": "verre",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": true
   }
  ]
 },
 {
  "lemma": "couteau",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "mouche",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "oiseau",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "église",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   },
   {
    "top": "material",
    "material_sub": "object",
    "fix": true,
    "esp": false
   }
  ]
 },
 {
  "lemma": "maison",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   },
   {
    "top": "material",
    "material_sub": "object",
    "fix": true,
    "esp": false
   }
  ]
 },
 {
  "lemma": "porte",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "route_sub": "conduit",
    "fix": true,
    "esp": false
   }
  ],
  "component_function": "access"
 },
 {
  "lemma": "poignée",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": true,
    "esp": false
   }
  ],
  "component_function": "grasping"
 },
 {
  "lemma": "anse",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": true,
    "esp": false
   }
  ],
  "component_function": "grasping"
 },
 {
  "lemma": "main",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": true,
    "esp": false
   }
  ],
  "component_function": "manipulation"
 },
 {
  "lemma": "extrémité",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ],
  "nli_rule": "end"
 },
 {
  "lemma": "haut",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ],
  "nli_rule": "top"
 },
 {
  "lemma": "dessus",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ],
  "nli_rule": "top"
 },
 {
  "lemma": "coin",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ],
  "nli_rule": "corner"
 },
 {
  "lemma": "fond",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ],
  "nli_rule": "interior"
 },
 {
  "lemma": "pied",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ],
  "nli_rule": "bottom"
 },
 {
  "lemma": "avant",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ],
  "nli_rule": "front"
 },
 {
  "lemma": "arrière",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ],
  "nli_rule": "back"
 },
 {
  "lemma": "gauche",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ],
  "nli_rule": "left"
 },
 {
  "lemma": "droite",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "place",
    "fix": true,
    "esp": true
   }
  ],
  "nli_rule": "right"
 },
 {
  "lemma": "gâteau",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "farine",
  "proper": false,
  "views": [
   {
    "top": "substance",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "part",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "matter_portion",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "morceau",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "matter_portion",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "tasse",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "brebis",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "troupeau",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "ferme",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "couple",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "gagnants",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "fête",
  "proper": false,
  "views": [
   {
    "top": "eventuality",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "voiture",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "armoire",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": true,
    "esp": false
   }
  ]
 },
 {
  "lemma": "lustre",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": false,
    "esp": false
   }
  ]
 },
 {
  "lemma": "tapis",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": true,
    "esp": false
   }
  ]
 },
 {
  "lemma": "lampadaire",
  "proper": false,
  "views": [
   {
    "top": "material",
    "material_sub": "object",
    "fix": true,
    "esp": false
   }
  ]
 }
]
)lok";

inline const char* kSceneJson = R"lok([
 {
  "id": "table1",
  "lemma": "table",
  "extent": {
   "0": [
    [
     0,
     0,
     0
    ],
    [
     0,
     0,
     1
    ],
    [
     0,
     0,
     2
    ],
    [
     0,
     1,
     0
    ],
    [
     0,
     1,
     1
    ],
    [
     0,
     1,
     2
    ],
    [
     0,
     2,
     0
    ],
    [
     0,
     2,
     1
    ],
    [
     0,
     2,
     2
    ],
    [
     0,
     3,
     0
    ],
    [
     0,
     3,
     1
    ],
    [
     0,
     3,
     2
    ],
    [
     1,
     0,
     0
    ],
    [
     1,
     0,
     1
    ],
    [
     1,
     0,
     2
    ],
    [
     1,
     1,
     0
    ],
    [
     1,
     1,
     1
    ],
    [
     1,
     1,
     2
    ],
    [
     1,
     2,
     0
    ],
    [
     1,
     2,
     1
    ],
    [
     1,
     2,
     2
    ],
    [
     1,
     3,
     0
    ],
    [
     1,
     3,
     1
    ],
    [
     1,
     3,
     2
    ],
    [
     2,
     0,
     0
    ],
    [
     2,
     0,
     1
    ],
    [
     2,
     0,
     2
    ],
    [
     2,
     1,
     0
    ],
    [
     2,
     1,
     1
    ],
    [
     2,
     1,
     2
    ],
    [
     2,
     2,
     0
    ],
    [
     2,
     2,
     1
    ],
    [
     2,
     2,
     2
    ],
    [
     2,
     3,
     0
    ],
    [
     2,
     3,
     1
    ],
    [
     2,
     3,
     2
    ],
    [
     3,
     0,
     0
    ],
    [
     3,
     0,
     1
    ],
    [
     3,
     0,
     2
    ],
    [
     3,
     1,
     0
    ],
    [
     3,
     1,
     1
    ],
    [
     3,
     1,
     2
    ],
    [
     3,
     2,
     0
    ],
    [
     3,
     2,
     1
    ],
    [
     3,
     2,
     2
    ],
    [
     3,
     3,
     0
    ],
    [
     3,
     3,
     1
    ],
    [
     3,
     3,
     2
    ],
    [
     4,
     0,
     0
    ],
    [
     4,
     0,
     1
    ],
    [
     4,
     0,
     2
    ],
    [
     4,
     1,
     0
    ],
    [
     4,
     1,
     1
    ],
    [
     4,
     1,
     2
    ],
    [
     4,
     2,
     0
    ],
    [
     4,
     2,
     1
    ],
    [
     4,
     2,
     2
    ],
    [
     4,
     3,
     0
    ],
    [
     4,
     3,
     1
    ],
    [
     4,
     3,
     2
    ],
    [
     5,
     0,
     0
    ],
    [
     5,
     0,
     1
    ],
    [
     5,
     0,
     2
    ],
    [
     5,
     1,
     0
    ],
    [
     5,
     1,
     1
    ],
    [
     5,
     1,
     2
    ],
    [
     5,
     2,
     0
    ],
    [
     5,
     2,
     1
    ],
    [
     5,
     2,
     2
    ],
    [
     5,
     3,
     0
    ],
    [
     5,
     3,
     1
    ],
    [
     5,
     3,
     2
    ]
   ],
   "1": [
    [
     0,
     0,
     0
    ],
    [
     0,
     0,
     1
    ],
    [
     0,
     0,
     2
    ],
    [
     0,
     1,
     0
    ],
    [
     0,
     1,
     1
    ],
    [
     0,
     1,
     2
    ],
    [
     0,
     2,
     0
    ],
    [
     0,
     2,
     1
    ],
    [
     0,
     2,
     2
    ],
    [
     0,
     3,
     0
    ],
    [
     0,
     3,
     1
    ],
    [
     0,
     3,
     2
    ],
    [
     1,
     0,
     0
    ],
    [
     1,
     0,
     1
    ],
    [
     1,
     0,
     2
    ],
    [
     1,
     1,
     0
    ],
    [
     1,
     1,
     1
    ],
    [
     1,
     1,
     2
    ],
    [
     1,
     2,
     0
    ],
    [
     1,
     2,
     1
    ],
    [
     1,
     2,
     2
    ],
    [
     1,
     3,
     0
    ],
    [
     1,
     3,
     1
    ],
    [
     1,
     3,
     2
    ],
    [
     2,
     0,
     0
    ],
    [
     2,
     0,
     1
    ],
    [
     2,
     0,
     2
    ],
    [
     2,
     1,
     0
    ],
    [
     2,
     1,
     1
    ],
    [
     2,
     1,
     2
    ],
    [
     2,
     2,
     0
    ],
    [
     2,
     2,
     1
    ],
    [
     2,
     2,
     2
    ],
    [
     2,
     3,
     0
    ],
    [
     2,
     3,
     1
    ],
    [
     2,
     3,
     2
    ],
    [
     3,
     0,
     0
    ],
    [
     3,
     0,
     1
    ],
    [
     3,
     0,
     2
    ],
    [
     3,
     1,
     0
    ],
    [
     3,
     1,
     1
    ],
    [
     3,
     1,
     2
    ],
    [
     3,
     2,
     0
    ],
    [
     3,
     2,
     1
    ],
    [
     3,
     2,
     2
    ],
    [
     3,
     3,
     0
    ],
    [
     3,
     3,
     1
    ],
    [
     3,
     3,
     2
    ],
    [
     4,
     0,
     0
    ],
    [
     4,
     0,
     1
    ],
    [
     4,
     0,
     2
    ],
    [
     4,
     1,
     0
    ],
    [
     4,
     1,
     1
    ],
    [
     4,
     1,
     2
    ],
    [
     4,
     2,
     0
    ],
    [
     4,
     2,
     1
    ],
    [
     4,
     2,
     2
    ],
    [
     4,
     3,
     0
    ],
    [
     4,
     3,
     1
    ],
    [
     4,
     3,
     2
    ],
    [
     5,
     0,
     0
    ],
    [
     5,
     0,
     1
    ],
    [
     5,
     0,
     2
    ],
    [
     5,
     1,
     0
    ],
    [
     5,
     1,
     1
    ],
    [
     5,
     1,
     2
    ],
    [
     5,
     2,
     0
    ],
    [
     5,
     2,
     1
    ],
    [
     5,
     2,
     2
    ],
    [
     5,
     3,
     0
    ],
    [
     5,
     3,
     1
    ],
    [
     5,
     3,
     2
    ]
   ],
   "2": [
    [
     0,
     0,
     0
    ],
    [
     0,
     0,
     1
    ],
    [
     0,
     0,
     2
    ],
    [
     0,
     1,
     0
    ],
    [
     0,
     1,
     1
    ],
    [
     0,
     1,
     2
    ],
    [
     0,
     2,
     0
    ],
    [
     0,
     2,
     1
    ],
    [
     0,
     2,
     2
    ],
    [
     0,
     3,
     0
    ],
    [
     0,
     3,
     1
    ],
    [
     0,
     3,
     2
    ],
    [
     1,
     0,
     0
    ],
    [
     1,
     0,
     1
    ],
    [
     1,
     0,
     2
    ],
    [
     1,
     1,
     0
    ],
    [
     1,
     1,
     1
    ],
    [
     1,
     1,
     2
    ],
    [
     1,
     2,
     0
    ],
    [
     1,
     2,
     1
    ],
    [
     1,
     2,
     2
    ],
    [
     1,
     3,
     0
    ],
    [
     1,
     3,
     1
    ],
    [
     1,
     3,
     2
    ],
    [
     2,
     0,
     0
    ],
    [
     2,
     0,
     1
    ],
    [
     2,
     0,
     2
    ],
    [
     2,
     1,
     0
    ],
    [
     2,
     1,
     1
    ],
    [
     2,
     1,
     2
    ],
    [
     2,
     2,
     0
    ],
    [
     2,
     2,
     1
    ],
    [
     2,
     2,
     2
    ],
    [
     2,
     3,
     0
    ],
    [
     2,
     3,
     1
    ],
    [
     2,
     3,
     2
    ],
    [
     3,
     0,
     0
    ],
    [
     3,
     0,
     1
    ],
    [
     3,
     0,
     2
    ],
    [
     3,
     1,
     0
    ],
    [
     3,
     1,
     1
    ],
    [
     3,
     1,
     2
    ],
    [
     3,
     2,
     0
    ],
    [
     3,
     2,
     1
    ],
    [
     3,
     2,
     2
    ],
    [
     3,
     3,
     0
    ],
    [
     3,
     3,
     1
    ],
    [
     3,
     3,
     2
    ],
    [
     4,
     0,
     0
    ],
    [
     4,
     0,
     1
    ],
    [
     4,
     0,
     2
    ],
    [
     4,
     1,
     0
    ],
    [
     4,
     1,
     1
    ],
    [
     4,
     1,
     2
    ],
    [
     4,
     2,
     0
    ],
    [
     4,
     2,
     1
    ],
    [
     4,
     2,
     2
    ],
    [
     4,
     3,
     0
    ],
    [
     4,
     3,
     1
    ],
    [
     4,
     3,
     2
    ],
    [
     5,
     0,
     0
    ],
    [
     5,
     0,
     1
    ],
    [
     5,
     0,
     2
    ],
    [
     5,
     1,
     0
    ],
    [
     5,
     1,
     1
    ],
    [
     5,
     1,
     2
    ],
    [
     5,
     2,
     0
    ],
    [
     5,
     2,
     1
    ],
    [
     5,
     2,
     2
    ],
    [
     5,
     3,
     0
    ],
    [
     5,
     3,
     1
    ],
    [
     5,
     3,
     2
    ]
   ]
  }
 },
 {
  "id": "extremite1",
  "lemma": "extrémité",
  "extent": {
   "0": [
    [
     4,
     0,
     0
    ],
    [
     4,
     0,
     1
    ],
    [
     4,
     0,
     2
    ],
    [
     4,
     1,
     0
    ],
    [
     4,
     1,
     1
    ],
    [
     4,
     1,
     2
    ],
    [
     4,
     2,
     0
    ],
    [
     4,
     2,
     1
    ],
    [
     4,
     2,
     2
    ],
    [
     4,
     3,
     0
    ],
    [
     4,
     3,
     1
    ],
    [
     4,
     3,
     2
    ],
    [
     5,
     0,
     0
    ],
    [
     5,
     0,
     1
    ],
    [
     5,
     0,
     2
    ],
    [
     5,
     1,
     0
    ],
    [
     5,
     1,
     1
    ],
    [
     5,
     1,
     2
    ],
    [
     5,
     2,
     0
    ],
    [
     5,
     2,
     1
    ],
    [
     5,
     2,
     2
    ],
    [
     5,
     3,
     0
    ],
    [
     5,
     3,
     1
    ],
    [
     5,
     3,
     2
    ]
   ],
   "1": [
    [
     4,
     0,
     0
    ],
    [
     4,
     0,
     1
    ],
    [
     4,
     0,
     2
    ],
    [
     4,
     1,
     0
    ],
    [
     4,
     1,
     1
    ],
    [
     4,
     1,
     2
    ],
    [
     4,
     2,
     0
    ],
    [
     4,
     2,
     1
    ],
    [
     4,
     2,
     2
    ],
    [
     4,
     3,
     0
    ],
    [
     4,
     3,
     1
    ],
    [
     4,
     3,
     2
    ],
    [
     5,
     0,
     0
    ],
    [
     5,
     0,
     1
    ],
    [
     5,
     0,
     2
    ],
    [
     5,
     1,
     0
    ],
    [
     5,
     1,
     1
    ],
    [
     5,
     1,
     2
    ],
    [
     5,
     2,
     0
    ],
    [
     5,
     2,
     1
    ],
    [
     5,
     2,
     2
    ],
    [
     5,
     3,
     0
    ],
    [
     5,
     3,
     1
    ],
    [
     5,
     3,
     2
    ]
   ],
   "2": [
    [
     4,
     0,
     0
    ],
    [
     4,
     0,
     1
    ],
    [
     4,
     0,
     2
    ],
    [
     4,
     1,
     0
    ],
    [
     4,
     1,
     1
    ],
    [
     4,
     1,
     2
    ],
    [
     4,
     2,
     0
    ],
    [
     4,
     2,
     1
    ],
    [
     4,
     2,
     2
    ],
    [
     4,
     3,
     0
    ],
    [
     4,
     3,
     1
    ],
    [
     4,
     3,
     2
    ],
    [
     5,
     0,
     0
    ],
    [
     5,
     0,
     1
    ],
    [
     5,
     0,
     2
    ],
    [
     5,
     1,
     0
    ],
    [
     5,
     1,
     1
    ],
    [
     5,
     1,
     2
    ],
    [
     5,
     2,
     0
    ],
    [
     5,
     2,
     1
    ],
    [
     5,
     2,
     2
    ],
    [
     5,
     3,
     0
    ],
    [
     5,
     3,
     1
    ],
    [
     5,
     3,
     2
    ]
   ]
  }
 },
 {
  "id": "mouche1",
  "lemma": "mouche",
  "extent": {
   "0": [
    [
     10,
     10,
     1
    ]
   ],
   "1": [
    [
     11,
     10,
     1
    ]
   ],
   "2": [
    [
     12,
     10,
     1
    ]
   ]
  }
 },
 {
  "id": "pre1",
  "lemma": "pré",
  "extent": {
   "0": [
    [
     20,
     0,
     0
    ],
    [
     20,
     1,
     0
    ],
    [
     20,
     2,
     0
    ],
    [
     20,
     3,
     0
    ],
    [
     20,
     4,
     0
    ],
    [
     20,
     5,
     0
    ],
    [
     20,
     6,
     0
    ],
    [
     20,
     7,
     0
    ],
    [
     21,
     0,
     0
    ],
    [
     21,
     1,
     0
    ],
    [
     21,
     2,
     0
    ],
    [
     21,
     3,
     0
    ],
    [
     21,
     4,
     0
    ],
    [
     21,
     5,
     0
    ],
    [
     21,
     6,
     0
    ],
    [
     21,
     7,
     0
    ],
    [
     22,
     0,
     0
    ],
    [
     22,
     1,
     0
    ],
    [
     22,
     2,
     0
    ],
    [
     22,
     3,
     0
    ],
    [
     22,
     4,
     0
    ],
    [
     22,
     5,
     0
    ],
    [
     22,
     6,
     0
    ],
    [
     22,
     7,
     0
    ],
    [
     23,
     0,
     0
    ],
    [
     23,
     1,
     0
    ],
    [
     23,
     2,
     0
    ],
    [
     23,
     3,
     0
    ],
    [
     23,
     4,
     0
    ],
    [
     23,
     5,
     0
    ],
    [
     23,
     6,
     0
    ],
    [
     23,
     7,
     0
    ],
    [
     24,
     0,
     0
    ],
    [
     24,
     1,
     0
    ],
    [
     24,
     2,
     0
    ],
    [
     24,
     3,
     0
    ],
    [
     24,
     4,
     0
    ],
    [
     24,
     5,
     0
    ],
    [
     24,
     6,
     0
    ],
    [
     24,
     7,
     0
    ],
    [
     25,
     0,
     0
    ],
    [
     25,
     1,
     0
    ],
    [
     25,
     2,
     0
    ],
    [
     25,
     3,
     0
    ],
    [
     25,
     4,
     0
    ],
    [
     25,
     5,
     0
    ],
    [
     25,
     6,
     0
    ],
    [
     25,
     7,
     0
    ],
    [
     26,
     0,
     0
    ],
    [
     26,
     1,
     0
    ],
    [
     26,
     2,
     0
    ],
    [
     26,
     3,
     0
    ],
    [
     26,
     4,
     0
    ],
    [
     26,
     5,
     0
    ],
    [
     26,
     6,
     0
    ],
    [
     26,
     7,
     0
    ],
    [
     27,
     0,
     0
    ],
    [
     27,
     1,
     0
    ],
    [
     27,
     2,
     0
    ],
    [
     27,
     3,
     0
    ],
    [
     27,
     4,
     0
    ],
    [
     27,
     5,
     0
    ],
    [
     27,
     6,
     0
    ],
    [
     27,
     7,
     0
    ]
   ]
  }
 },
 {
  "id": "oiseau1",
  "lemma": "oiseau",
  "extent": {
   "0": [
    [
     23,
     3,
     3
    ]
   ]
  }
 },
 {
  "id": "verre1",
  "lemma": "verre",
  "extent": {
   "0": [
    [
     14,
     0,
     0
    ],
    [
     14,
     0,
     1
    ]
   ]
  }
 },
 {
  "id": "couteau1",
  "lemma": "couteau",
  "extent": {
   "0": [
    [
     16,
     0,
     0
    ],
    [
     17,
     0,
     0
    ]
   ]
  }
 },
 {
  "id": "rocher1",
  "lemma": "rocher",
  "extent": {
   "0": [
    [
     30,
     0,
     0
    ],
    [
     30,
     0,
     1
    ],
    [
     30,
     1,
     0
    ],
    [
     30,
     1,
     1
    ],
    [
     30,
     2,
     0
    ],
    [
     30,
     2,
     1
    ],
    [
     31,
     0,
     0
    ],
    [
     31,
     0,
     1
    ],
    [
     31,
     1,
     0
    ],
    [
     31,
     1,
     1
    ],
    [
     31,
     2,
     0
    ],
    [
     31,
     2,
     1
    ],
    [
     32,
     0,
     0
    ],
    [
     32,
     0,
     1
    ],
    [
     32,
     1,
     0
    ],
    [
     32,
     1,
     1
    ],
    [
     32,
     2,
     0
    ],
    [
     32,
     2,
     1
    ]
   ]
  }
 },
 {
  "id": "maison1",
  "lemma": "maison",
  "extent": {
   "0": [
    [
     40,
     0,
     0
    ],
    [
     40,
     0,
     1
    ],
    [
     40,
     0,
     2
    ],
    [
     40,
     0,
     3
    ],
    [
     40,
     1,
     0
    ],
    [
     40,
     1,
     1
    ],
    [
     40,
     1,
     2
    ],
    [
     40,
     1,
     3
    ],
    [
     40,
     2,
     0
    ],
    [
     40,
     2,
     1
    ],
    [
     40,
     2,
     2
    ],
    [
     40,
     2,
     3
    ],
    [
     40,
     3,
     0
    ],
    [
     40,
     3,
     1
    ],
    [
     40,
     3,
     2
    ],
    [
     40,
     3,
     3
    ],
    [
     41,
     0,
     0
    ],
    [
     41,
     0,
     1
    ],
    [
     41,
     0,
     2
    ],
    [
     41,
     0,
     3
    ],
    [
     41,
     1,
     0
    ],
    [
     41,
     1,
     1
    ],
    [
     41,
     1,
     2
    ],
    [
     41,
     1,
     3
    ],
    [
     41,
     2,
     0
    ],
    [
     41,
     2,
     1
    ],
    [
     41,
     2,
     2
    ],
    [
     41,
     2,
     3
    ],
    [
     41,
     3,
     0
    ],
    [
     41,
     3,
     1
    ],
    [
     41,
     3,
     2
    ],
    [
     41,
     3,
     3
    ],
    [
     42,
     0,
     0
    ],
    [
     42,
     0,
     1
    ],
    [
     42,
     0,
     2
    ],
    [
     42,
     0,
     3
    ],
    [
     42,
     1,
     0
    ],
    [
     42,
     1,
     1
    ],
    [
     42,
     1,
     2
    ],
    [
     42,
     1,
     3
    ],
    [
     42,
     2,
     0
    ],
    [
     42,
     2,
     1
    ],
    [
     42,
     2,
     2
    ],
    [
     42,
     2,
     3
    ],
    [
     42,
     3,
     0
    ],
    [
     42,
     3,
     1
    ],
    [
     42,
     3,
     2
    ],
    [
     42,
     3,
     3
    ],
    [
     43,
     0,
     0
    ],
    [
     43,
     0,
     1
    ],
    [
     43,
     0,
     2
    ],
    [
     43,
     0,
     3
    ],
    [
     43,
     1,
     0
    ],
    [
     43,
     1,
     1
    ],
    [
     43,
     1,
     2
    ],
    [
     43,
     1,
     3
    ],
    [
     43,
     2,
     0
    ],
    [
     43,
     2,
     1
    ],
    [
     43,
     2,
     2
    ],
    [
     43,
     2,
     3
    ],
    [
     43,
     3,
     0
    ],
    [
     43,
     3,
     1
    ],
    [
     43,
     3,
     2
    ],
    [
     43,
     3,
     3
    ],
    [
     44,
     0,
     0
    ],
    [
     44,
     0,
     1
    ],
    [
     44,
     0,
     2
    ],
    [
     44,
     0,
     3
    ],
    [
     44,
     1,
     0
    ],
    [
     44,
     1,
     1
    ],
    [
     44,
     1,
     2
    ],
    [
     44,
     1,
     3
    ],
    [
     44,
     2,
     0
    ],
    [
     44,
     2,
     1
    ],
    [
     44,
     2,
     2
    ],
    [
     44,
     2,
     3
    ],
    [
     44,
     3,
     0
    ],
    [
     44,
     3,
     1
    ],
    [
     44,
     3,
     2
    ],
    [
     44,
     3,
     3
    ]
   ]
  },
  "dependence": [
   {
    "on": "porte1",
    "genericity": "generic",
    "kind": "functional"
   }
  ]
 },
 {
  "id": "porte1",
  "lemma": "porte",
  "extent": {
   "0": [
    [
     40,
     1,
     0
    ],
    [
     40,
     1,
     1
    ],
    [
     40,
     1,
     2
    ],
    [
     40,
     2,
     0
    ],
    [
     40,
     2,
     1
    ],
    [
     40,
     2,
     2
    ]
   ]
  },
  "dependence": [
   {
    "on": "poignee1",
    "genericity": "generic",
    "kind": "functional"
   }
  ]
 },
 {
  "id": "poignee1",
  "lemma": "poignée",
  "extent": {
   "0": [
    [
     40,
     2,
     1
    ]
   ]
  }
 },
 {
  "id": "jean1",
  "lemma": "jean",
  "extent": {
   "0": [
    [
     50,
     0,
     0
    ],
    [
     50,
     0,
     1
    ],
    [
     50,
     0,
     2
    ]
   ]
  }
 },
 {
  "id": "main1",
  "lemma": "main",
  "extent": {
   "0": [
    [
     50,
     0,
     1
    ]
   ]
  },
  "dependence": [
   {
    "on": "jean1",
    "genericity": "individual",
    "kind": "functional"
   }
  ]
 },
 {
  "id": "gateau1",
  "lemma": "gâteau",
  "extent": {
   "0": [
    [
     60,
     0,
     0
    ],
    [
     60,
     0,
     1
    ],
    [
     60,
     0,
     2
    ],
    [
     60,
     1,
     0
    ],
    [
     60,
     1,
     1
    ],
    [
     60,
     1,
     2
    ],
    [
     60,
     2,
     0
    ],
    [
     60,
     2,
     1
    ],
    [
     60,
     2,
     2
    ],
    [
     60,
     3,
     0
    ],
    [
     60,
     3,
     1
    ],
    [
     60,
     3,
     2
    ],
    [
     61,
     0,
     0
    ],
    [
     61,
     0,
     1
    ],
    [
     61,
     0,
     2
    ],
    [
     61,
     1,
     0
    ],
    [
     61,
     1,
     1
    ],
    [
     61,
     1,
     2
    ],
    [
     61,
     2,
     0
    ],
    [
     61,
     2,
     1
    ],
    [
     61,
     2,
     2
    ],
    [
     61,
     3,
     0
    ],
    [
     61,
     3,
     1
    ],
    [
     61,
     3,
     2
    ],
    [
     62,
     0,
     0
    ],
    [
     62,
     0,
     1
    ],
    [
     62,
     0,
     2
    ],
    [
     62,
     1,
     0
    ],
    [
     62,
     1,
     1
    ],
    [
     62,
     1,
     2
    ],
    [
     62,
     2,
     0
    ],
    [
     62,
     2,
     1
    ],
    [
     62,
     2,
     2
    ],
    [
     62,
     3,
     0
    ],
    [
     62,
     3,
     1
    ],
    [
     62,
     3,
     2
    ],
    [
     63,
     0,
     0
    ],
    [
     63,
     0,
     1
    ],
    [
     63,
     0,
     2
    ],
    [
     63,
     1,
     0
    ],
    [
     63,
     1,
     1
    ],
    [
     63,
     1,
     2
    ],
    [
     63,
     2,
     0
    ],
    [
     63,
     2,
     1
    ],
    [
     63,
     2,
     2
    ],
    [
     63,
     3,
     0
    ],
    [
     63,
     3,
     1
    ],
    [
     63,
     3,
     2
    ]
   ]
  },
  "made_of": "farine1"
 },
 {
  "id": "farine1",
  "lemma": "farine",
  "extent": {
   "0": [
    [
     60,
     0,
     0
    ],
    [
     60,
     0,
     1
    ],
    [
     60,
     0,
     2
    ],
    [
     60,
     1,
     0
    ],
    [
     60,
     1,
     1
    ],
    [
     60,
     1,
     2
    ],
    [
     60,
     2,
     0
    ],
    [
     60,
     2,
     1
    ],
    [
     60,
     2,
     2
    ],
    [
     60,
     3,
     0
    ],
    [
     60,
     3,
     1
    ],
    [
     60,
     3,
     2
    ],
    [
     61,
     0,
     0
    ],
    [
     61,
     0,
     1
    ],
    [
     61,
     0,
     2
    ],
    [
     61,
     1,
     0
    ],
    [
     61,
     1,
     1
    ],
    [
     61,
     1,
     2
    ],
    [
     61,
     2,
     0
    ],
    [
     61,
     2,
     1
    ],
    [
     61,
     2,
     2
    ],
    [
     61,
     3,
     0
    ],
    [
     61,
     3,
     1
    ],
    [
     61,
     3,
     2
    ],
    [
     62,
     0,
     0
    ],
    [
     62,
     0,
     1
    ],
    [
     62,
     0,
     2
    ],
    [
     62,
     1,
     0
    ],
    [
     62,
     1,
     1
    ],
    [
     62,
     1,
     2
    ],
    [
     62,
     2,
     0
    ],
    [
     62,
     2,
     1
    ],
    [
     62,
     2,
     2
    ],
    [
     62,
     3,
     0
    ],
    [
     62,
     3,
     1
    ],
    [
     62,
     3,
     2
    ],
    [
     63,
     0,
     0
    ],
    [
     63,
     0,
     1
    ],
    [
     63,
     0,
     2
    ],
    [
     63,
     1,
     0
    ],
    [
     63,
     1,
     1
    ],
    [
     63,
     1,
     2
    ],
    [
     63,
     2,
     0
    ],
    [
     63,
     2,
     1
    ],
    [
     63,
     2,
     2
    ],
    [
     63,
     3,
     0
    ],
    [
     63,
     3,
     1
    ],
    [
     63,
     3,
     2
    ]
   ]
  }
 },
 {
  "id": "part1",
  "lemma": "part",
  "extent": {
   "0": [
    [
     60,
     0,
     0
    ],
    [
     60,
     0,
     1
    ],
    [
     60,
     0,
     2
    ],
    [
     60,
     1,
     0
    ],
    [
     60,
     1,
     1
    ],
    [
     60,
     1,
     2
    ],
    [
     60,
     2,
     0
    ],
    [
     60,
     2,
     1
    ],
    [
     60,
     2,
     2
    ],
    [
     60,
     3,
     0
    ],
    [
     60,
     3,
     1
    ],
    [
     60,
     3,
     2
    ]
   ]
  },
  "portions": [
   {
    "whole": "gateau1",
    "mode": "conventional"
   }
  ]
 },
 {
  "id": "tasse1",
  "lemma": "tasse",
  "extent": {
   "0": [
    [
     66,
     0,
     0
    ],
    [
     66,
     0,
     1
    ],
    [
     66,
     0,
     2
    ],
    [
     66,
     1,
     0
    ],
    [
     66,
     1,
     1
    ],
    [
     66,
     1,
     2
    ],
    [
     66,
     2,
     0
    ],
    [
     66,
     2,
     1
    ],
    [
     66,
     2,
     2
    ],
    [
     67,
     0,
     0
    ],
    [
     67,
     0,
     1
    ],
    [
     67,
     0,
     2
    ],
    [
     67,
     1,
     0
    ],
    [
     67,
     1,
     1
    ],
    [
     67,
     1,
     2
    ],
    [
     67,
     2,
     0
    ],
    [
     67,
     2,
     1
    ],
    [
     67,
     2,
     2
    ],
    [
     68,
     0,
     0
    ],
    [
     68,
     0,
     1
    ],
    [
     68,
     0,
     2
    ],
    [
     68,
     1,
     0
    ],
    [
     68,
     1,
     1
    ],
    [
     68,
     1,
     2
    ],
    [
     68,
     2,
     0
    ],
    [
     68,
     2,
     1
    ],
    [
     68,
     2,
     2
    ]
   ]
  }
 },
 {
  "id": "morceau1",
  "lemma": "morceau",
  "extent": {
   "0": [
    [
     66,
     0,
     0
    ],
    [
     66,
     0,
     1
    ],
    [
     66,
     0,
     2
    ]
   ]
  },
  "portions": [
   {
    "whole": "tasse1",
    "mode": "piece"
   }
  ]
 },
 {
  "id": "brebis1",
  "lemma": "brebis",
  "extent": {
   "0": [
    [
     70,
     0,
     0
    ]
   ]
  }
 },
 {
  "id": "brebis2",
  "lemma": "brebis",
  "extent": {
   "0": [
    [
     71,
     0,
     0
    ]
   ]
  }
 },
 {
  "id": "brebis3",
  "lemma": "brebis",
  "extent": {
   "0": [
    [
     72,
     0,
     0
    ]
   ]
  }
 },
 {
  "id": "brebis4",
  "lemma": "brebis",
  "extent": {
   "0": [
    [
     73,
     0,
     0
    ]
   ]
  }
 },
 {
  "id": "troupeau1",
  "lemma": "troupeau",
  "plurality": "collection",
  "members": [
   "brebis1",
   "brebis2",
   "brebis3"
  ],
  "extent": {
   "0": [
    [
     70,
     0,
     0
    ],
    [
     71,
     0,
     0
    ],
    [
     72,
     0,
     0
    ]
   ]
  }
 },
 {
  "id": "ferme1",
  "lemma": "ferme",
  "plurality": "collection",
  "members": [
   "brebis1",
   "brebis2",
   "brebis3",
   "brebis4"
  ],
  "extent": {
   "0": [
    [
     70,
     0,
     0
    ],
    [
     71,
     0,
     0
    ],
    [
     72,
     0,
     0
    ],
    [
     73,
     0,
     0
    ]
   ]
  }
 },
 {
  "id": "dupont_a",
  "lemma": "personne",
  "extent": {
   "0": [
    [
     74,
     6,
     0
    ]
   ]
  }
 },
 {
  "id": "dupont_b",
  "lemma": "personne",
  "extent": {
   "0": [
    [
     75,
     6,
     0
    ]
   ]
  }
 },
 {
  "id": "martin",
  "lemma": "personne",
  "extent": {
   "0": [
    [
     76,
     6,
     0
    ]
   ]
  }
 },
 {
  "id": "couple1",
  "lemma": "couple",
  "plurality": "collection",
  "members": [
   "dupont_a",
   "dupont_b"
  ],
  "extent": {
   "0": [
    [
     74,
     6,
     0
    ],
    [
     75,
     6,
     0
    ]
   ]
  }
 },
 {
  "id": "gagnants1",
  "lemma": "gagnants",
  "plurality": "collection",
  "members": [
   "dupont_a",
   "dupont_b",
   "martin"
  ],
  "extent": {
   "0": [
    [
     74,
     6,
     0
    ],
    [
     75,
     6,
     0
    ],
    [
     76,
     6,
     0
    ]
   ]
  }
 },
 {
  "id": "fete1",
  "lemma": "fête"
 },
 {
  "id": "voiture1",
  "lemma": "voiture",
  "extent": {
   "0": [
    [
     80,
     0,
     0
    ],
    [
     80,
     0,
     1
    ],
    [
     80,
     0,
     2
    ],
    [
     80,
     1,
     0
    ],
    [
     80,
     1,
     1
    ],
    [
     80,
     1,
     2
    ],
    [
     80,
     2,
     0
    ],
    [
     80,
     2,
     1
    ],
    [
     80,
     2,
     2
    ],
    [
     81,
     0,
     0
    ],
    [
     81,
     0,
     1
    ],
    [
     81,
     0,
     2
    ],
    [
     81,
     1,
     0
    ],
    [
     81,
     1,
     1
    ],
    [
     81,
     1,
     2
    ],
    [
     81,
     2,
     0
    ],
    [
     81,
     2,
     1
    ],
    [
     81,
     2,
     2
    ],
    [
     82,
     0,
     0
    ],
    [
     82,
     0,
     1
    ],
    [
     82,
     0,
     2
    ],
    [
     82,
     1,
     0
    ],
    [
     82,
     1,
     1
    ],
    [
     82,
     1,
     2
    ],
    [
     82,
     2,
     0
    ],
    [
     82,
     2,
     1
    ],
    [
     82,
     2,
     2
    ],
    [
     83,
     0,
     0
    ],
    [
     83,
     0,
     1
    ],
    [
     83,
     0,
     2
    ],
    [
     83,
     1,
     0
    ],
    [
     83,
     1,
     1
    ],
    [
     83,
     1,
     2
    ],
    [
     83,
     2,
     0
    ],
    [
     83,
     2,
     1
    ],
    [
     83,
     2,
     2
    ],
    [
     84,
     0,
     0
    ],
    [
     84,
     0,
     1
    ],
    [
     84,
     0,
     2
    ],
    [
     84,
     1,
     0
    ],
    [
     84,
     1,
     1
    ],
    [
     84,
     1,
     2
    ],
    [
     84,
     2,
     0
    ],
    [
     84,
     2,
     1
    ],
    [
     84,
     2,
     2
    ],
    [
     85,
     0,
     0
    ],
    [
     85,
     0,
     1
    ],
    [
     85,
     0,
     2
    ],
    [
     85,
     1,
     0
    ],
    [
     85,
     1,
     1
    ],
    [
     85,
     1,
     2
    ],
    [
     85,
     2,
     0
    ],
    [
     85,
     2,
     1
    ],
    [
     85,
     2,
     2
    ]
   ]
  },
  "orientation": {
   "motion_front": "+x",
   "function_front": "-x",
   "elongation_axis": "x",
   "aerodynamic_front": "-x"
  }
 },
 {
  "id": "armoire1",
  "lemma": "armoire",
  "extent": {
   "0": [
    [
     90,
     0,
     0
    ],
    [
     90,
     0,
     1
    ],
    [
     90,
     0,
     2
    ],
    [
     90,
     0,
     3
    ],
    [
     90,
     0,
     4
    ],
    [
     90,
     0,
     5
    ],
    [
     90,
     1,
     0
    ],
    [
     90,
     1,
     1
    ],
    [
     90,
     1,
     2
    ],
    [
     90,
     1,
     3
    ],
    [
     90,
     1,
     4
    ],
    [
     90,
     1,
     5
    ],
    [
     90,
     2,
     0
    ],
    [
     90,
     2,
     1
    ],
    [
     90,
     2,
     2
    ],
    [
     90,
     2,
     3
    ],
    [
     90,
     2,
     4
    ],
    [
     90,
     2,
     5
    ],
    [
     90,
     3,
     0
    ],
    [
     90,
     3,
     1
    ],
    [
     90,
     3,
     2
    ],
    [
     90,
     3,
     3
    ],
    [
     90,
     3,
     4
    ],
    [
     90,
     3,
     5
    ],
    [
     91,
     0,
     0
    ],
    [
     91,
     0,
     1
    ],
    [
     91,
     0,
     2
    ],
    [
     91,
     0,
     3
    ],
    [
     91,
     0,
     4
    ],
    [
     91,
     0,
     5
    ],
    [
     91,
     1,
     0
    ],
    [
     91,
     1,
     1
    ],
    [
     91,
     1,
     2
    ],
    [
     91,
     1,
     3
    ],
    [
     91,
     1,
     4
    ],
    [
     91,
     1,
     5
    ],
    [
     91,
     2,
     0
    ],
    [
     91,
     2,
     1
    ],
    [
     91,
     2,
     2
    ],
    [
     91,
     2,
     3
    ],
    [
     91,
     2,
     4
    ],
    [
     91,
     2,
     5
    ],
    [
     91,
     3,
     0
    ],
    [
     91,
     3,
     1
    ],
    [
     91,
     3,
     2
    ],
    [
     91,
     3,
     3
    ],
    [
     91,
     3,
     4
    ],
    [
     91,
     3,
     5
    ],
    [
     92,
     0,
     0
    ],
    [
     92,
     0,
     1
    ],
    [
     92,
     0,
     2
    ],
    [
     92,
     0,
     3
    ],
    [
     92,
     0,
     4
    ],
    [
     92,
     0,
     5
    ],
    [
     92,
     1,
     0
    ],
    [
     92,
     1,
     1
    ],
    [
     92,
     1,
     2
    ],
    [
     92,
     1,
     3
    ],
    [
     92,
     1,
     4
    ],
    [
     92,
     1,
     5
    ],
    [
     92,
     2,
     0
    ],
    [
     92,
     2,
     1
    ],
    [
     92,
     2,
     2
    ],
    [
     92,
     2,
     3
    ],
    [
     92,
     2,
     4
    ],
    [
     92,
     2,
     5
    ],
    [
     92,
     3,
     0
    ],
    [
     92,
     3,
     1
    ],
    [
     92,
     3,
     2
    ],
    [
     92,
     3,
     3
    ],
    [
     92,
     3,
     4
    ],
    [
     92,
     3,
     5
    ],
    [
     93,
     0,
     0
    ],
    [
     93,
     0,
     1
    ],
    [
     93,
     0,
     2
    ],
    [
     93,
     0,
     3
    ],
    [
     93,
     0,
     4
    ],
    [
     93,
     0,
     5
    ],
    [
     93,
     1,
     0
    ],
    [
     93,
     1,
     1
    ],
    [
     93,
     1,
     2
    ],
    [
     93,
     1,
     3
    ],
    [
     93,
     1,
     4
    ],
    [
     93,
     1,
     5
    ],
    [
     93,
     2,
     0
    ],
    [
     93,
     2,
     1
    ],
    [
     93,
     2,
     2
    ],
    [
     93,
     2,
     3
    ],
    [
     93,
     2,
     4
    ],
    [
     93,
     2,
     5
    ],
    [
     93,
     3,
     0
    ],
    [
     93,
     3,
     1
    ],
    [
     93,
     3,
     2
    ],
    [
     93,
     3,
     3
    ],
    [
     93,
     3,
     4
    ],
    [
     93,
     3,
     5
    ]
   ]
  }
 },
 {
  "id": "lustre1",
  "lemma": "lustre",
  "extent": {
   "0": [
    [
     91,
     1,
     8
    ]
   ]
  }
 }
]
)lok";

}  // namespace lokatif::builtin
