// Fixtures for the rendering-contract tests.
//
// sessionStart and leafAttack are captured verbatim from the live backend
// (9x9 border strategy; the far bottom leaf (7,0) attacked from the
// initial formation).  oneMoveAttack and illegalAttack are injected
// fixtures: the first pins the "render exactly one moved guard" contract,
// the second forces the referee-violation banner, which the certified
// strategy never produces on its own.

import { AttackReply, StartReply } from "../src/protocol.js";

export const sessionStart: StartReply = {
  "session_id": 1,
  "state": {
    "dims": [
      9,
      9
    ],
    "guards": [
      [
        0,
        0
      ],
      [
        0,
        2
      ],
      [
        0,
        3
      ],
      [
        0,
        4
      ],
      [
        0,
        5
      ],
      [
        0,
        7
      ],
      [
        0,
        8
      ],
      [
        1,
        0
      ],
      [
        1,
        4
      ],
      [
        2,
        1
      ],
      [
        2,
        8
      ],
      [
        3,
        0
      ],
      [
        3,
        5
      ],
      [
        3,
        8
      ],
      [
        4,
        0
      ],
      [
        4,
        2
      ],
      [
        4,
        8
      ],
      [
        5,
        0
      ],
      [
        5,
        6
      ],
      [
        5,
        8
      ],
      [
        6,
        0
      ],
      [
        6,
        3
      ],
      [
        7,
        7
      ],
      [
        7,
        8
      ],
      [
        8,
        0
      ],
      [
        8,
        1
      ],
      [
        8,
        3
      ],
      [
        8,
        4
      ],
      [
        8,
        5
      ],
      [
        8,
        6
      ],
      [
        8,
        8
      ]
    ],
    "phase": "D",
    "interior_base": [
      0,
      0
    ],
    "formations": [
      {
        "origin": [
          1,
          0
        ],
        "side": "bottom",
        "formation": "low_leaf"
      },
      {
        "origin": [
          8,
          1
        ],
        "side": "right",
        "formation": "low_leaf"
      },
      {
        "origin": [
          7,
          8
        ],
        "side": "top",
        "formation": "low_leaf"
      },
      {
        "origin": [
          0,
          7
        ],
        "side": "left",
        "formation": "low_leaf"
      }
    ],
    "roles": {
      "corner": [
        [
          0,
          0
        ],
        [
          0,
          8
        ],
        [
          8,
          0
        ],
        [
          8,
          8
        ]
      ],
      "border": [
        [
          0,
          2
        ],
        [
          0,
          3
        ],
        [
          0,
          4
        ],
        [
          0,
          5
        ],
        [
          0,
          7
        ],
        [
          1,
          0
        ],
        [
          2,
          8
        ],
        [
          3,
          0
        ],
        [
          3,
          8
        ],
        [
          4,
          0
        ],
        [
          4,
          8
        ],
        [
          5,
          0
        ],
        [
          5,
          8
        ],
        [
          6,
          0
        ],
        [
          7,
          8
        ],
        [
          8,
          1
        ],
        [
          8,
          3
        ],
        [
          8,
          4
        ],
        [
          8,
          5
        ],
        [
          8,
          6
        ]
      ],
      "interior": [
        [
          1,
          4
        ],
        [
          2,
          1
        ],
        [
          3,
          5
        ],
        [
          4,
          2
        ],
        [
          5,
          6
        ],
        [
          6,
          3
        ],
        [
          7,
          7
        ]
      ]
    },
    "session_id": 1,
    "strategy": "border",
    "steps": 0,
    "config_hash": "e186f55cc203f134"
  }
};

export const leafAttack: AttackReply = {
  "response": {
    "attacked": [
      7,
      0
    ],
    "anchors": [],
    "moves": [
      {
        "from": [
          1,
          0
        ],
        "to": [
          2,
          0
        ]
      },
      {
        "from": [
          6,
          0
        ],
        "to": [
          7,
          0
        ]
      },
      {
        "from": [
          8,
          1
        ],
        "to": [
          8,
          2
        ]
      },
      {
        "from": [
          8,
          6
        ],
        "to": [
          8,
          7
        ]
      },
      {
        "from": [
          7,
          8
        ],
        "to": [
          6,
          8
        ]
      },
      {
        "from": [
          2,
          8
        ],
        "to": [
          1,
          8
        ]
      },
      {
        "from": [
          0,
          7
        ],
        "to": [
          0,
          6
        ]
      },
      {
        "from": [
          0,
          2
        ],
        "to": [
          0,
          1
        ]
      }
    ]
  },
  "state": {
    "dims": [
      9,
      9
    ],
    "guards": [
      [
        0,
        0
      ],
      [
        0,
        1
      ],
      [
        0,
        3
      ],
      [
        0,
        4
      ],
      [
        0,
        5
      ],
      [
        0,
        6
      ],
      [
        0,
        8
      ],
      [
        1,
        4
      ],
      [
        1,
        8
      ],
      [
        2,
        0
      ],
      [
        2,
        1
      ],
      [
        3,
        0
      ],
      [
        3,
        5
      ],
      [
        3,
        8
      ],
      [
        4,
        0
      ],
      [
        4,
        2
      ],
      [
        4,
        8
      ],
      [
        5,
        0
      ],
      [
        5,
        6
      ],
      [
        5,
        8
      ],
      [
        6,
        3
      ],
      [
        6,
        8
      ],
      [
        7,
        0
      ],
      [
        7,
        7
      ],
      [
        8,
        0
      ],
      [
        8,
        2
      ],
      [
        8,
        3
      ],
      [
        8,
        4
      ],
      [
        8,
        5
      ],
      [
        8,
        7
      ],
      [
        8,
        8
      ]
    ],
    "phase": "D",
    "interior_base": [
      0,
      0
    ],
    "formations": [
      {
        "origin": [
          1,
          0
        ],
        "side": "bottom",
        "formation": "high_leaf"
      },
      {
        "origin": [
          8,
          1
        ],
        "side": "right",
        "formation": "high_leaf"
      },
      {
        "origin": [
          7,
          8
        ],
        "side": "top",
        "formation": "high_leaf"
      },
      {
        "origin": [
          0,
          7
        ],
        "side": "left",
        "formation": "high_leaf"
      }
    ],
    "roles": {
      "corner": [
        [
          0,
          0
        ],
        [
          0,
          8
        ],
        [
          8,
          0
        ],
        [
          8,
          8
        ]
      ],
      "border": [
        [
          0,
          1
        ],
        [
          0,
          3
        ],
        [
          0,
          4
        ],
        [
          0,
          5
        ],
        [
          0,
          6
        ],
        [
          1,
          8
        ],
        [
          2,
          0
        ],
        [
          3,
          0
        ],
        [
          3,
          8
        ],
        [
          4,
          0
        ],
        [
          4,
          8
        ],
        [
          5,
          0
        ],
        [
          5,
          8
        ],
        [
          6,
          8
        ],
        [
          7,
          0
        ],
        [
          8,
          2
        ],
        [
          8,
          3
        ],
        [
          8,
          4
        ],
        [
          8,
          5
        ],
        [
          8,
          7
        ]
      ],
      "interior": [
        [
          1,
          4
        ],
        [
          2,
          1
        ],
        [
          3,
          5
        ],
        [
          4,
          2
        ],
        [
          5,
          6
        ],
        [
          6,
          3
        ],
        [
          7,
          7
        ]
      ]
    },
    "session_id": 1,
    "strategy": "border",
    "steps": 1,
    "config_hash": "c677abfa82d47d03"
  },
  "verdict": {
    "legal": true,
    "violations": []
  }
};

export const oneMoveAttack: AttackReply = {
  response: {
    attacked: [7, 0],
    anchors: [],
    moves: [{ from: [6, 0], to: [7, 0] }],
  },
  state: JSON.parse(JSON.stringify(leafAttack.state)),
  verdict: { legal: true, violations: [] },
};

export const illegalAttack: AttackReply = {
  response: {
    attacked: [4, 4],
    anchors: [],
    moves: [{ from: [3, 5], to: [4, 4] }],
  },
  state: JSON.parse(JSON.stringify(sessionStart.state)),
  verdict: {
    legal: false,
    violations: [
      { code: "DOMINATION_LOST", detail: "some vertex uncovered" },
      { code: "GUARD_COUNT_CHANGED", detail: "31 -> 30" },
    ],
  },
};
