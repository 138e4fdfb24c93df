/*
   Copyright 2026 The intval authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef INTVAL_INTVAL_HPP
#define INTVAL_INTVAL_HPP

#include "intval/algebra.hpp"
#include "intval/error.hpp"
#include "intval/hensel.hpp"
#include "intval/integer.hpp"
#include "intval/linalg.hpp"
#include "intval/matrix.hpp"
#include "intval/nullideal.hpp"
#include "intval/poly.hpp"
#include "intval/rings.hpp"

#endif
