#pragma once

#include <memory>

#include "selfsim/errors.hpp"

namespace selfsim {

// Group elements are opaque to the engine; each machine knows its own
// concrete representation and is handed back its own elements.
struct ElemBase {
  virtual ~ElemBase() = default;
};

using Elem = std::shared_ptr<const ElemBase>;

template <typename T>
const T& elem_as(const Elem& e) {
  const T* p = dynamic_cast<const T*>(e.get());
  if (!p) throw MalformedMachine("element representation does not match this machine");
  return *p;
}

}  // namespace selfsim
