#ifndef NCO_REGISTRY_DATA_HPP
#define NCO_REGISTRY_DATA_HPP

namespace nco {

// Built-in registry, in the same JSON format accepted for user files.
// Presentation entries: generators (name -> bubble literal), relations
// (equivalence families of tree literals), orientation ("src -> tgt"),
// model ("bulle" = coloured trees evaluated by word substitution,
// "cncb-closure" = plain trees evaluated by polygon gluing).

inline const char* kBuiltinPresentationsJson = R"json({
  "bulle": {
    "model": "bulle",
    "psi": true,
    "generators": {"AAA": "b:1:22", "AAB": "b:1:21", "BAA": "b:1:12", "BAB": "b:1:11",
                   "ABA": "b:2:22", "ABB": "b:2:21", "BBA": "b:2:12", "BBB": "b:2:11"},
    "relations": [
      ["BBB[*,BAB[*,*]]", "BBB[BAB[*,*],*]", "ABB[BBB[*,*],*]", "BBA[*,BBB[*,*]]"],
      ["BBB[*,AAB[*,*]]", "BBB[BAA[*,*],*]", "ABB[BBA[*,*],*]", "BBA[*,ABB[*,*]]"],
      ["BBB[*,AAA[*,*]]", "ABA[BBA[*,*],*]", "BBA[*,ABA[*,*]]", "BBA[BAA[*,*],*]"],
      ["BBB[*,BAA[*,*]]", "ABA[BBB[*,*],*]", "BBA[*,BBA[*,*]]", "BBA[BAB[*,*],*]"],
      ["BBB[AAB[*,*],*]", "ABB[*,BAB[*,*]]", "ABB[ABB[*,*],*]", "ABA[*,BBB[*,*]]"],
      ["BBB[AAA[*,*],*]", "ABB[*,AAB[*,*]]", "ABB[ABA[*,*],*]", "ABA[*,ABB[*,*]]"],
      ["ABB[*,AAA[*,*]]", "ABA[*,ABA[*,*]]", "ABA[ABA[*,*],*]", "BBA[AAA[*,*],*]"],
      ["ABB[*,BAA[*,*]]", "ABA[*,BBA[*,*]]", "ABA[ABB[*,*],*]", "BBA[AAB[*,*],*]"],
      ["BAB[*,BAB[*,*]]", "BAB[BAB[*,*],*]", "AAB[BBB[*,*],*]", "BAA[*,BBB[*,*]]"],
      ["BAB[*,AAB[*,*]]", "BAB[BAA[*,*],*]", "AAB[BBA[*,*],*]", "BAA[*,ABB[*,*]]"],
      ["BAB[*,AAA[*,*]]", "AAA[BBA[*,*],*]", "BAA[*,ABA[*,*]]", "BAA[BAA[*,*],*]"],
      ["BAB[*,BAA[*,*]]", "AAA[BBB[*,*],*]", "BAA[*,BBA[*,*]]", "BAA[BAB[*,*],*]"],
      ["BAB[AAB[*,*],*]", "AAB[*,BAB[*,*]]", "AAB[ABB[*,*],*]", "AAA[*,BBB[*,*]]"],
      ["BAB[AAA[*,*],*]", "AAB[*,AAB[*,*]]", "AAB[ABA[*,*],*]", "AAA[*,ABB[*,*]]"],
      ["AAB[*,AAA[*,*]]", "AAA[*,ABA[*,*]]", "AAA[ABA[*,*],*]", "BAA[AAA[*,*],*]"],
      ["AAB[*,BAA[*,*]]", "AAA[*,BBA[*,*]]", "AAA[ABB[*,*],*]", "BAA[AAB[*,*],*]"]
    ],
    "orientation": [
      "BBB[*,BAB[*,*]] -> BBB[BAB[*,*],*]",
      "ABB[BBB[*,*],*] -> BBB[BAB[*,*],*]",
      "BBA[*,BBB[*,*]] -> BBB[BAB[*,*],*]",
      "BBB[*,AAB[*,*]] -> BBB[BAA[*,*],*]",
      "ABB[BBA[*,*],*] -> BBB[BAA[*,*],*]",
      "BBA[*,ABB[*,*]] -> BBB[BAA[*,*],*]",
      "BBB[*,AAA[*,*]] -> BBA[BAA[*,*],*]",
      "ABA[BBA[*,*],*] -> BBA[BAA[*,*],*]",
      "BBA[*,ABA[*,*]] -> BBA[BAA[*,*],*]",
      "BBB[*,BAA[*,*]] -> BBA[BAB[*,*],*]",
      "ABA[BBB[*,*],*] -> BBA[BAB[*,*],*]",
      "BBA[*,BBA[*,*]] -> BBA[BAB[*,*],*]",
      "BBB[AAB[*,*],*] -> ABB[ABB[*,*],*]",
      "ABB[*,BAB[*,*]] -> ABB[ABB[*,*],*]",
      "ABA[*,BBB[*,*]] -> ABB[ABB[*,*],*]",
      "BBB[AAA[*,*],*] -> ABB[ABA[*,*],*]",
      "ABB[*,AAB[*,*]] -> ABB[ABA[*,*],*]",
      "ABA[*,ABB[*,*]] -> ABB[ABA[*,*],*]",
      "ABB[*,AAA[*,*]] -> ABA[ABA[*,*],*]",
      "ABA[*,ABA[*,*]] -> ABA[ABA[*,*],*]",
      "BBA[AAA[*,*],*] -> ABA[ABA[*,*],*]",
      "ABB[*,BAA[*,*]] -> ABA[ABB[*,*],*]",
      "ABA[*,BBA[*,*]] -> ABA[ABB[*,*],*]",
      "BBA[AAB[*,*],*] -> ABA[ABB[*,*],*]",
      "BAB[*,BAB[*,*]] -> BAB[BAB[*,*],*]",
      "AAB[BBB[*,*],*] -> BAB[BAB[*,*],*]",
      "BAA[*,BBB[*,*]] -> BAB[BAB[*,*],*]",
      "BAB[*,AAB[*,*]] -> BAB[BAA[*,*],*]",
      "AAB[BBA[*,*],*] -> BAB[BAA[*,*],*]",
      "BAA[*,ABB[*,*]] -> BAB[BAA[*,*],*]",
      "BAB[*,AAA[*,*]] -> BAA[BAA[*,*],*]",
      "AAA[BBA[*,*],*] -> BAA[BAA[*,*],*]",
      "BAA[*,ABA[*,*]] -> BAA[BAA[*,*],*]",
      "BAB[*,BAA[*,*]] -> BAA[BAB[*,*],*]",
      "AAA[BBB[*,*],*] -> BAA[BAB[*,*],*]",
      "BAA[*,BBA[*,*]] -> BAA[BAB[*,*],*]",
      "BAB[AAB[*,*],*] -> AAB[ABB[*,*],*]",
      "AAB[*,BAB[*,*]] -> AAB[ABB[*,*],*]",
      "AAA[*,BBB[*,*]] -> AAB[ABB[*,*],*]",
      "BAB[AAA[*,*],*] -> AAB[ABA[*,*],*]",
      "AAB[*,AAB[*,*]] -> AAB[ABA[*,*],*]",
      "AAA[*,ABB[*,*]] -> AAB[ABA[*,*],*]",
      "AAB[*,AAA[*,*]] -> AAA[ABA[*,*],*]",
      "AAA[*,ABA[*,*]] -> AAA[ABA[*,*],*]",
      "BAA[AAA[*,*],*] -> AAA[ABA[*,*],*]",
      "AAB[*,BAA[*,*]] -> AAA[ABB[*,*],*]",
      "AAA[*,BBA[*,*]] -> AAA[ABB[*,*],*]",
      "BAA[AAB[*,*],*] -> AAA[ABB[*,*],*]"
    ]
  },
  "cncb": {
    "model": "cncb-closure",
    "generators": {"AAA": "b:1:22", "AAB": "b:1:21", "BAA": "b:1:12", "BAB": "b:1:11",
                   "ABA": "b:2:22", "ABB": "b:2:21", "BBA": "b:2:12", "BBB": "b:2:11"},
    "relations": [
      ["BBB[*,BAB[*,*]]", "BBB[BAB[*,*],*]", "ABB[BBB[*,*],*]", "BBA[*,BBB[*,*]]"],
      ["BBB[*,AAB[*,*]]", "BBB[BAA[*,*],*]", "ABB[BBA[*,*],*]", "BBA[*,ABB[*,*]]"],
      ["BBB[*,AAA[*,*]]", "ABA[BBA[*,*],*]", "BBA[*,ABA[*,*]]", "BBA[BAA[*,*],*]"],
      ["BBB[*,BAA[*,*]]", "ABA[BBB[*,*],*]", "BBA[*,BBA[*,*]]", "BBA[BAB[*,*],*]"],
      ["BBB[AAB[*,*],*]", "ABB[*,BAB[*,*]]", "ABB[ABB[*,*],*]", "ABA[*,BBB[*,*]]"],
      ["BBB[AAA[*,*],*]", "ABB[*,AAB[*,*]]", "ABB[ABA[*,*],*]", "ABA[*,ABB[*,*]]"],
      ["ABB[*,AAA[*,*]]", "ABA[*,ABA[*,*]]", "ABA[ABA[*,*],*]", "BBA[AAA[*,*],*]"],
      ["ABB[*,BAA[*,*]]", "ABA[*,BBA[*,*]]", "ABA[ABB[*,*],*]", "BBA[AAB[*,*],*]"],
      ["BAB[*,BAB[*,*]]", "BAB[BAB[*,*],*]", "AAB[BBB[*,*],*]", "BAA[*,BBB[*,*]]"],
      ["BAB[*,AAB[*,*]]", "BAB[BAA[*,*],*]", "AAB[BBA[*,*],*]", "BAA[*,ABB[*,*]]"],
      ["BAB[*,AAA[*,*]]", "AAA[BBA[*,*],*]", "BAA[*,ABA[*,*]]", "BAA[BAA[*,*],*]"],
      ["BAB[*,BAA[*,*]]", "AAA[BBB[*,*],*]", "BAA[*,BBA[*,*]]", "BAA[BAB[*,*],*]"],
      ["BAB[AAB[*,*],*]", "AAB[*,BAB[*,*]]", "AAB[ABB[*,*],*]", "AAA[*,BBB[*,*]]"],
      ["BAB[AAA[*,*],*]", "AAB[*,AAB[*,*]]", "AAB[ABA[*,*],*]", "AAA[*,ABB[*,*]]"],
      ["AAB[*,AAA[*,*]]", "AAA[*,ABA[*,*]]", "AAA[ABA[*,*],*]", "BAA[AAA[*,*],*]"],
      ["AAB[*,BAA[*,*]]", "AAA[*,BBA[*,*]]", "AAA[ABB[*,*],*]", "BAA[AAB[*,*],*]"]
    ],
    "orientation": [
      "BBB[*,BAB[*,*]] -> BBB[BAB[*,*],*]",
      "ABB[BBB[*,*],*] -> BBB[BAB[*,*],*]",
      "BBA[*,BBB[*,*]] -> BBB[BAB[*,*],*]",
      "BBB[*,AAB[*,*]] -> BBB[BAA[*,*],*]",
      "ABB[BBA[*,*],*] -> BBB[BAA[*,*],*]",
      "BBA[*,ABB[*,*]] -> BBB[BAA[*,*],*]",
      "BBB[*,AAA[*,*]] -> BBA[BAA[*,*],*]",
      "ABA[BBA[*,*],*] -> BBA[BAA[*,*],*]",
      "BBA[*,ABA[*,*]] -> BBA[BAA[*,*],*]",
      "BBB[*,BAA[*,*]] -> BBA[BAB[*,*],*]",
      "ABA[BBB[*,*],*] -> BBA[BAB[*,*],*]",
      "BBA[*,BBA[*,*]] -> BBA[BAB[*,*],*]",
      "BBB[AAB[*,*],*] -> ABB[ABB[*,*],*]",
      "ABB[*,BAB[*,*]] -> ABB[ABB[*,*],*]",
      "ABA[*,BBB[*,*]] -> ABB[ABB[*,*],*]",
      "BBB[AAA[*,*],*] -> ABB[ABA[*,*],*]",
      "ABB[*,AAB[*,*]] -> ABB[ABA[*,*],*]",
      "ABA[*,ABB[*,*]] -> ABB[ABA[*,*],*]",
      "ABB[*,AAA[*,*]] -> ABA[ABA[*,*],*]",
      "ABA[*,ABA[*,*]] -> ABA[ABA[*,*],*]",
      "BBA[AAA[*,*],*] -> ABA[ABA[*,*],*]",
      "ABB[*,BAA[*,*]] -> ABA[ABB[*,*],*]",
      "ABA[*,BBA[*,*]] -> ABA[ABB[*,*],*]",
      "BBA[AAB[*,*],*] -> ABA[ABB[*,*],*]",
      "BAB[*,BAB[*,*]] -> BAB[BAB[*,*],*]",
      "AAB[BBB[*,*],*] -> BAB[BAB[*,*],*]",
      "BAA[*,BBB[*,*]] -> BAB[BAB[*,*],*]",
      "BAB[*,AAB[*,*]] -> BAB[BAA[*,*],*]",
      "AAB[BBA[*,*],*] -> BAB[BAA[*,*],*]",
      "BAA[*,ABB[*,*]] -> BAB[BAA[*,*],*]",
      "BAB[*,AAA[*,*]] -> BAA[BAA[*,*],*]",
      "AAA[BBA[*,*],*] -> BAA[BAA[*,*],*]",
      "BAA[*,ABA[*,*]] -> BAA[BAA[*,*],*]",
      "BAB[*,BAA[*,*]] -> BAA[BAB[*,*],*]",
      "AAA[BBB[*,*],*] -> BAA[BAB[*,*],*]",
      "BAA[*,BBA[*,*]] -> BAA[BAB[*,*],*]",
      "BAB[AAB[*,*],*] -> AAB[ABB[*,*],*]",
      "AAB[*,BAB[*,*]] -> AAB[ABB[*,*],*]",
      "AAA[*,BBB[*,*]] -> AAB[ABB[*,*],*]",
      "BAB[AAA[*,*],*] -> AAB[ABA[*,*],*]",
      "AAB[*,AAB[*,*]] -> AAB[ABA[*,*],*]",
      "AAA[*,ABB[*,*]] -> AAB[ABA[*,*],*]",
      "AAB[*,AAA[*,*]] -> AAA[ABA[*,*],*]",
      "AAA[*,ABA[*,*]] -> AAA[ABA[*,*],*]",
      "BAA[AAA[*,*],*] -> AAA[ABA[*,*],*]",
      "AAB[*,BAA[*,*]] -> AAA[ABB[*,*],*]",
      "AAA[*,BBA[*,*]] -> AAA[ABB[*,*],*]",
      "BAA[AAB[*,*],*] -> AAA[ABB[*,*],*]"
    ]
  },
  "aaa-aab": {
    "model": "cncb-closure",
    "generators": {"AAA": "b:1:22", "AAB": "b:1:21"},
    "relations": [],
    "orientation": []
  },
  "aaa-bbb": {
    "model": "cncb-closure",
    "generators": {"AAA": "b:1:22", "BBB": "b:2:11"},
    "relations": [
      ["AAA[*,BBB[*,AAA[BBB[*,*],*]]]", "AAA[BBB[AAA[*,BBB[*,*]],*],*]"],
      ["AAA[*,BBB[AAA[*,*],AAA[*,*]]]", "AAA[BBB[AAA[*,*],AAA[*,*]],*]"],
      ["AAA[*,BBB[AAA[*,BBB[*,*]],*]]", "AAA[BBB[AAA[*,*],*],BBB[*,*]]"],
      ["AAA[BBB[*,*],BBB[*,AAA[*,*]]]", "AAA[BBB[*,AAA[BBB[*,*],*]],*]"],
      ["BBB[*,AAA[*,BBB[AAA[*,*],*]]]", "BBB[AAA[BBB[*,AAA[*,*]],*],*]"],
      ["BBB[*,AAA[BBB[*,*],BBB[*,*]]]", "BBB[AAA[BBB[*,*],BBB[*,*]],*]"],
      ["BBB[*,AAA[BBB[*,AAA[*,*]],*]]", "BBB[AAA[BBB[*,*],*],AAA[*,*]]"],
      ["BBB[AAA[*,*],AAA[*,BBB[*,*]]]", "BBB[AAA[*,BBB[AAA[*,*],*]],*]"]
    ],
    "orientation": []
  },
  "aaa-abb": {
    "model": "cncb-closure",
    "generators": {"AAA": "b:1:22", "ABB": "b:2:21"},
    "relations": [
      ["ABB[*,AAA[*,ABB[*,*]]]", "ABB[ABB[*,AAA[*,*]],*]"],
      ["AAA[*,ABB[*,AAA[*,*]]]", "AAA[ABB[*,AAA[*,*]],*]"]
    ],
    "orientation": [
      "ABB[ABB[*,AAA[*,*]],*] -> ABB[*,AAA[*,ABB[*,*]]]",
      "AAA[*,ABB[*,AAA[*,*]]] -> AAA[ABB[*,AAA[*,*]],*]"
    ]
  },
  "aab-abb": {
    "model": "cncb-closure",
    "generators": {"AAB": "b:1:21", "ABB": "b:2:21"},
    "relations": [
      ["ABB[*,AAB[ABB[*,*],*]]", "ABB[ABB[*,AAB[*,*]],*]"],
      ["AAB[*,AAB[ABB[*,*],*]]", "AAB[ABB[*,AAB[*,*]],*]"]
    ],
    "orientation": [
      "ABB[*,AAB[ABB[*,*],*]] -> ABB[ABB[*,AAB[*,*]],*]",
      "AAB[*,AAB[ABB[*,*],*]] -> AAB[ABB[*,AAB[*,*]],*]"
    ]
  },
  "aab-bba": {
    "model": "cncb-closure",
    "generators": {"AAB": "b:1:21", "BBA": "b:2:12"},
    "relations": [
      ["AAB[*,AAB[BBA[*,*],*]]", "AAB[BBA[AAB[*,*],*],*]"],
      ["BBA[*,BBA[AAB[*,*],*]]", "BBA[AAB[BBA[*,*],*],*]"]
    ],
    "orientation": [
      "AAB[*,AAB[BBA[*,*],*]] -> AAB[BBA[AAB[*,*],*],*]",
      "BBA[*,BBA[AAB[*,*],*]] -> BBA[AAB[BBA[*,*],*],*]"
    ]
  },
  "aaa-bab": {
    "model": "cncb-closure",
    "generators": {"AAA": "b:1:22", "BAB": "b:1:11"},
    "relations": [
      ["BAB[BAB[*,*],*]", "BAB[*,BAB[*,*]]"]
    ],
    "orientation": [
      "BAB[*,BAB[*,*]] -> BAB[BAB[*,*],*]"
    ]
  },
  "aab-baa": {
    "model": "cncb-closure",
    "generators": {"AAB": "b:1:21", "BAA": "b:1:12"},
    "relations": [
      ["BAA[AAB[*,*],*]", "AAB[*,BAA[*,*]]"]
    ],
    "orientation": [
      "AAB[*,BAA[*,*]] -> BAA[AAB[*,*],*]"
    ]
  },
  "aab-bab": {
    "model": "cncb-closure",
    "generators": {"AAB": "b:1:21", "BAB": "b:1:11"},
    "relations": [
      ["BAB[BAB[*,*],*]", "BAB[*,BAB[*,*]]"],
      ["BAB[AAB[*,*],*]", "AAB[*,BAB[*,*]]"]
    ],
    "orientation": [
      "BAB[BAB[*,*],*] -> BAB[*,BAB[*,*]]",
      "BAB[AAB[*,*],*] -> AAB[*,BAB[*,*]]"
    ]
  },
  "aaa-aba": {
    "model": "cncb-closure",
    "generators": {"AAA": "b:1:22", "ABA": "b:2:22"},
    "relations": [
      ["ABA[ABA[*,*],*]", "ABA[*,ABA[*,*]]"],
      ["AAA[ABA[*,*],*]", "AAA[*,ABA[*,*]]"]
    ],
    "orientation": [
      "ABA[*,ABA[*,*]] -> ABA[ABA[*,*],*]",
      "AAA[*,ABA[*,*]] -> AAA[ABA[*,*],*]"
    ]
  },
  "baa-aba": {
    "model": "cncb-closure",
    "generators": {"BAA": "b:1:12", "ABA": "b:2:22"},
    "relations": [
      ["ABA[ABA[*,*],*]", "ABA[*,ABA[*,*]]"],
      ["BAA[BAA[*,*],*]", "BAA[*,ABA[*,*]]"]
    ],
    "orientation": [
      "ABA[ABA[*,*],*] -> ABA[*,ABA[*,*]]",
      "BAA[BAA[*,*],*] -> BAA[*,ABA[*,*]]"
    ]
  },
  "bab-aba": {
    "model": "cncb-closure",
    "generators": {"BAB": "b:1:11", "ABA": "b:2:22"},
    "relations": [
      ["ABA[ABA[*,*],*]", "ABA[*,ABA[*,*]]"],
      ["BAB[BAB[*,*],*]", "BAB[*,BAB[*,*]]"]
    ],
    "orientation": [
      "ABA[*,ABA[*,*]] -> ABA[ABA[*,*],*]",
      "BAB[*,BAB[*,*]] -> BAB[BAB[*,*],*]"
    ]
  }
})json";

// Hilbert-equation registry: terms are [coef, t_exp, y1_exp, y2_exp, F_exp],
// asserting sum_i coef t^a y1^b y2^c F^d == 0.
inline const char* kEquationsJson = R"json({
  "cncb": [[-1,1,0,0,0],[-1,2,0,0,0],[1,0,0,0,1],[-4,1,0,0,1],[-3,0,0,0,2]],
  "cncb-refined": [[-1,1,0,0,0],[1,2,0,0,0],[-1,2,1,0,0],[-1,2,0,1,0],
                   [1,0,0,0,1],[-2,1,1,0,1],[-2,1,0,1,1],
                   [-1,0,0,0,2],[-1,0,1,0,2],[-1,0,0,1,2]],
  "cncb-areas": [[-1,1,0,0,0],[1,2,0,0,0],[-2,2,1,0,0],
                 [1,0,0,0,1],[-4,1,1,0,1],[-1,0,0,0,2],[-2,0,1,0,2]],
  "aaa-aab": [[1,1,0,0,0],[-1,0,0,0,1],[2,0,0,0,2]],
  "aaa-bbb": [[4,1,0,0,0],[-2,2,0,0,0],[-1,3,0,0,0],[1,4,0,0,0],
              [-4,0,0,0,1],[4,1,0,0,1],[-1,2,0,0,1],[2,3,0,0,1],
              [6,0,0,0,2],[1,1,0,0,2],[1,0,0,0,3],[-2,1,0,0,3],[-1,0,0,0,4]],
  "cubic-row": [[2,1,0,0,0],[-1,2,0,0,0],[2,1,0,0,1],[-2,0,0,0,1],[3,0,0,0,2]],
  "aaa-bab": [[1,1,0,0,0],[1,1,0,0,1],[-1,0,0,0,1],[1,0,0,0,2],[1,0,0,0,3]],
  "aab-baa": [[1,1,0,0,0],[-1,0,0,0,1],[2,0,0,0,2],[-1,0,0,0,3]],
  "quadratic-row": [[1,1,0,0,0],[-1,0,0,0,1],[1,1,0,0,1],[1,0,0,0,2]]
})json";

// The eleven orbits of two-generator subsets. dims are arities 1..8;
// based/nonbased are arities 2..8. Rational series are lists of fractions
// to be summed; monomials are [coef, z1_exp, z2_exp].
inline const char* kOrbitsJson = R"json([
  {"id": 1, "name": "aaa-aab", "representative": ["AAA","AAB"],
   "members": [["AAA","AAB"],["AAA","BAA"],["ABB","BBB"],["BBA","BBB"]],
   "algebra": "free",
   "dims": [1,2,8,40,224,1344,8448,54912],
   "based": [2,2,2,2,2,2,2], "nonbased": [0,0,0,0,0,0,0],
   "series1": [{"num": [[1,1,1],[1,0,2]], "den": [[1,0,0],[-1,0,1]]}],
   "series2": [],
   "equation": "aaa-aab",
   "character": "blue-prefix",
   "presentation": "aaa-aab"},
  {"id": 2, "name": "aaa-bbb", "representative": ["AAA","BBB"],
   "members": [["AAA","BBB"]],
   "algebra": null,
   "dims": [1,2,8,40,216,1246,7516,46838],
   "based": [1,2,5,10,21,42,85], "nonbased": [1,2,5,10,21,42,85],
   "series1": [{"num": [[1,1,0],[1,0,2]], "den": [[1,0,0],[-3,1,1],[-1,3,0],[-1,0,3]]},
               {"num": [[-1,1,0]], "den": [[1,0,0],[-1,1,1]]}],
   "series2": [{"num": [[1,0,1],[1,2,0]], "den": [[1,0,0],[-3,1,1],[-1,3,0],[-1,0,3]]},
               {"num": [[-1,0,1]], "den": [[1,0,0],[-1,1,1]]}],
   "equation": "aaa-bbb",
   "character": "consec-mod3",
   "presentation": "aaa-bbb"},
  {"id": 3, "name": "aaa-abb", "representative": ["AAA","ABB"],
   "members": [["AAA","ABB"],["AAA","BBA"],["AAB","BBB"],["BAA","BBB"]],
   "algebra": null,
   "dims": [1,2,8,38,200,1124,6608,40142],
   "based": [1,2,4,8,16,32,64], "nonbased": [1,2,4,8,16,32,64],
   "series1": [{"num": [[1,0,2]], "den": [[1,0,0],[-2,1,0],[1,2,0],[-1,0,2]]}],
   "series2": [{"num": [[1,1,1],[-1,2,1],[1,0,3]], "den": [[1,0,0],[-2,1,0],[1,2,0],[-1,0,2]]}],
   "equation": "cubic-row",
   "character": "first-blue-parity",
   "presentation": "aaa-abb"},
  {"id": 4, "name": "aab-abb", "representative": ["AAB","ABB"],
   "members": [["AAB","ABB"],["BAA","BBA"]],
   "algebra": null,
   "dims": [1,2,8,38,200,1124,6608,40142],
   "based": [1,2,4,8,16,32,64], "nonbased": [1,2,4,8,16,32,64],
   "series1": [{"num": [[1,1,1]], "den": [[1,0,0],[-1,1,0],[-1,0,1]]}],
   "series2": [{"num": [[1,1,1]], "den": [[1,0,0],[-1,1,0],[-1,0,1]]}],
   "equation": "cubic-row",
   "character": "first-blue-last-unc",
   "presentation": "aab-abb"},
  {"id": 5, "name": "aab-bba", "representative": ["AAB","BBA"],
   "members": [["AAB","BBA"],["ABB","BAA"]],
   "algebra": null,
   "dims": [1,2,8,38,200,1124,6608,40142],
   "based": [1,2,4,8,16,32,64], "nonbased": [1,2,4,8,16,32,64],
   "series1": [{"num": [[1,1,1]], "den": [[1,0,0],[-1,1,0],[-1,0,1]]}],
   "series2": [{"num": [[1,1,1]], "den": [[1,0,0],[-1,1,0],[-1,0,1]]}],
   "equation": "cubic-row",
   "character": "penult-last-swap",
   "presentation": "aab-bba"},
  {"id": 6, "name": "aaa-bab", "representative": ["AAA","BAB"],
   "members": [["AAA","BAB"],["ABA","BBB"]],
   "algebra": "associative",
   "dims": [1,2,7,31,154,820,4575,26398],
   "based": [2,3,5,8,13,21,34], "nonbased": [0,0,0,0,0,0,0],
   "series1": [{"num": [[1,2,0],[1,0,2],[1,1,2]], "den": [[1,0,0],[-1,1,0],[-1,0,2]]}],
   "series2": [],
   "equation": "aaa-bab",
   "character": "even-blue-runs",
   "presentation": "aaa-bab"},
  {"id": 7, "name": "aab-baa", "representative": ["AAB","BAA"],
   "members": [["AAB","BAA"],["ABB","BBA"]],
   "algebra": "L-algebra",
   "dims": [1,2,7,30,143,728,3876,21318],
   "based": [2,3,4,5,6,7,8], "nonbased": [0,0,0,0,0,0,0],
   "series1": [{"num": [[2,1,1],[-1,1,2]], "den": [[1,0,0],[-2,0,1],[1,0,2]]}],
   "series2": [],
   "equation": "aab-baa",
   "character": "one-unc",
   "presentation": "aab-baa"},
  {"id": 8, "name": "aab-bab", "representative": ["AAB","BAB"],
   "members": [["AAB","BAB"],["BAA","BAB"],["ABA","ABB"],["ABA","BBA"]],
   "algebra": "duplicial-like",
   "dims": [1,2,6,22,90,394,1806,8558],
   "based": [2,4,8,16,32,64,128], "nonbased": [0,0,0,0,0,0,0],
   "series1": [{"num": [[1,2,0],[1,1,1]], "den": [[1,0,0],[-1,1,0],[-1,0,1]]}],
   "series2": [],
   "equation": "quadratic-row",
   "character": "last-unc",
   "presentation": "aab-bab"},
  {"id": 9, "name": "aaa-aba", "representative": ["AAA","ABA"],
   "members": [["AAA","ABA"],["BAB","BBB"]],
   "algebra": null,
   "dims": [1,2,6,22,90,394,1806,8558],
   "based": [1,1,1,1,1,1,1], "nonbased": [1,1,1,1,1,1,1],
   "series1": [{"num": [[1,0,2]], "den": [[1,0,0],[-1,0,1]]}],
   "series2": [{"num": [[1,0,2]], "den": [[1,0,0],[-1,0,1]]}],
   "equation": "quadratic-row",
   "character": "all-blue",
   "presentation": "aaa-aba"},
  {"id": 10, "name": "baa-aba", "representative": ["BAA","ABA"],
   "members": [["AAB","ABA"],["ABA","BAA"],["ABB","BAB"],["BAB","BBA"]],
   "algebra": "dipterous",
   "dims": [1,2,6,22,90,394,1806,8558],
   "based": [1,1,1,1,1,1,1], "nonbased": [1,1,1,1,1,1,1],
   "series1": [{"num": [[1,1,1]], "den": [[1,0,0],[-1,0,1]]}],
   "series2": [{"num": [[1,0,2]], "den": [[1,0,0],[-1,0,1]]}],
   "equation": "quadratic-row",
   "character": "first-unc-rest-blue",
   "presentation": "baa-aba"},
  {"id": 11, "name": "bab-aba", "representative": ["BAB","ABA"],
   "members": [["ABA","BAB"]],
   "algebra": "two-associative",
   "dims": [1,2,6,22,90,394,1806,8558],
   "based": [1,1,1,1,1,1,1], "nonbased": [1,1,1,1,1,1,1],
   "series1": [{"num": [[1,2,0]], "den": [[1,0,0],[-1,1,0]]}],
   "series2": [{"num": [[1,0,2]], "den": [[1,0,0],[-1,0,1]]}],
   "equation": "quadratic-row",
   "character": "const-border",
   "presentation": "bab-aba"}
])json";

}  // namespace nco

#endif
