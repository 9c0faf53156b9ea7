// Copyright 2026 The omegak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Generated by gen_oracles.py (mpmath, 60 digits).  Do not edit.

namespace oracle {

struct GValue { int n; double t; double value; };
inline constexpr GValue kG[] = {
  {0, 1.0, 3.678794411714423216e-1},
  {1, 1.0, 3.678794411714423216e-1},
  {3, 2.0, 1.8044704431548358919e-1},
  {5, 3.0, 1.0081881344492448453e-1},
  {100, 1.0e+2, 3.9860996809147135234e-2},
  {170, 1.5e+2, 8.5223577140306006273e-3},
  {500, 4.805e+2, 1.2072269239193955078e-2},
  {2000, 1.99e+3, 8.699279466180659106e-3},
  {30, 2.5e-1, 2.5466341860737111322e-51},
};

struct GDerivValue { int n; int m; double t; double value; };
inline constexpr GDerivValue kGDeriv[] = {
  {0, 2, 1.0, 3.678794411714423216e-1},
  {1, 1, 3.0, -9.9574136735727885959e-2},
  {5, 3, 4.0, -9.76834074065822949e-3},
  {6, 4, 5.0, 1.9886301907023079973e-2},
  {50, 6, 4.8e+1, -7.5381596572165915881e-6},
  {100, 10, 1.0e+2, -2.1275657679755040195e-9},
  {100, 10, 9.05e+1, 2.8147229724761666696e-9},
  {20, 8, 3.0, 5.3888033638038182959e-6},
  {3, 7, 5.0e-1, 1.5378079434797393261e+1},
  {250, 40, 2.5e+2, 4.6160148637159863605e-27},
  {1000, 60, 1.0e+3, 4.8794726564112869211e-53},
  {40, 20, 4.125e+1, 1.9188881428742366656e-9},
};

struct KValue { int order; double x; double value; };
inline constexpr KValue kBesselK[] = {
  {0, 1.0, 4.2102443824070833334e-1},
  {1, 1.0, 6.0190723019723457474e-1},
  {2, 1.0, 1.6248388986351774828},
  {0, 2.0, 1.1389387274953343565e-1},
  {1, 2.0, 1.3986588181652242728e-1},
  {5, 3.0, 9.3777360238680803057e-1},
  {10, 5.0e-1, 1.8893756931990025964e+11},
  {0, 3.0e+1, 2.1324774964630563712e-14},
  {80, 1.0e+1, 3.9432082134511583091e+60},
  {3, 1.8999999999999999112, 7.8473235989120008197e-1},
  {3, 2.1000000000000000888, 5.373846690717812085e-1},
  {0, 1.0000000000000000208e-2, 4.7212447301610949443},
  {40, 6.0e+1, 5.1422476530462039206e-22},
};

struct OmegaValue { int n; int m; double x; double value; };
inline constexpr OmegaValue kOmega[] = {
  {0, 0, 1.0, 4.2102443824070833334e-1},
  {1, 0, 1.0, 6.0190723019723457474e-1},
  {1, 0, 2.0, 2.7973176363304485457e-1},
  {4, 0, 6.0, 9.8980102684610126096e-2},
  {3, 0, 4.0e+1, 9.2987465571275777333e-15},
  {0, 0, 2.0, 1.1389387274953343565e-1},
  {2, 1, 1.5, -1.5170710352830499055e-1},
  {0, 1, 1.0000000000000000208e-3, -9.9999623815608555346e+2},
  {5, 3, 1.0000000000000000208e-2, 7.4859750238833206816e-4},
  {20, 8, 3.0, 1.8263667624768738628e-6},
  {8, 4, 5.0e-1, 2.0144016457997884101e-3},
  {30, 2, 2.5e+1, -1.0197394673299323117e-3},
  {13, 6, 1.0000000000000000555e-1, 2.6229329731996414461e-5},
  {55, 1, 5.0e+1, -3.9442325507832839976e-4},
};

}  // namespace oracle
