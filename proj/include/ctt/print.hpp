#ifndef CTT_PRINT_HPP
#define CTT_PRINT_HPP

#include <string>

#include "ctt/syntax.hpp"

namespace ctt {

// Pretty-printing in the concrete syntax the parser accepts; binder names
// are disambiguated so the output reparses to an alpha-equal tree.
std::string show(const LfKind& k);
std::string show(const LfType& a);
std::string show(const LfTerm& m);
std::string show(const LfSubst& s);
std::string show(const LfCtx& c);
std::string show(const ErasedCtx& c);
std::string show(const CtxType& t);
std::string show(const CtxObj& c);
std::string show(const CompType& t);
std::string show(const CompTerm& t);
std::string show(const CompCtx& g);

}  // namespace ctt

#endif  // CTT_PRINT_HPP
