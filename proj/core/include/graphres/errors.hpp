// Copyright 2026 The graphres Authors
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

#ifndef GRAPHRES_ERRORS_HPP_
#define GRAPHRES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace graphres {

// Every precondition failure in the library derives from std::invalid_argument
// so callers (the CLI in particular) can map the whole family to one exit code.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vertex index or neighbour set outside 1..n.
class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};

// An exact computation was asked for beyond the enumeration bound it supports.
class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

// A label-join action was used under a model without the memory to read labels.
class InvalidActionForModel : public Error {
 public:
  using Error::Error;
};

// A modify choice was made at a step whose fired action is not a label join.
class ModifyUnsupported : public Error {
 public:
  using Error::Error;
};

class NotATree : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphres

#endif  // GRAPHRES_ERRORS_HPP_
