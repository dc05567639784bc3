#include "fracdim/errors.hpp"

namespace fracdim {

void throw_domain(const std::string& what) { throw DomainError(what); }

}  // namespace fracdim
