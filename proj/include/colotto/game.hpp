// Copyright 2026 The colotto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COLOTTO_GAME_HPP_
#define COLOTTO_GAME_HPP_

namespace colotto {

// A coalitional game: players 1 and 2 each fight a separate Lotto game
// against one adversary who splits a single budget between the two fronts.
struct GameParams {
  double phi1 = 1.0;
  double phi2 = 1.0;
  double x1 = 1.0;
  double x2 = 1.0;
  double adversary_budget = 1.0;
};

// Records whether normalize() exchanged the two players so that the stored
// game satisfies phi2 / phi1 <= x2 / x1.
struct Orientation {
  bool swapped = false;
};

struct PayoffProfile {
  double u1 = 0.0;
  double u2 = 0.0;
  double u_adversary = 0.0;

  double alliance() const noexcept { return u1 + u2; }
};

}  // namespace colotto

#endif  // COLOTTO_GAME_HPP_
