#ifndef ANTICHAIN_ANTICHAIN_HPP
#define ANTICHAIN_ANTICHAIN_HPP

#include "antichain/bounds.hpp"
#include "antichain/certio.hpp"
#include "antichain/construct.hpp"
#include "antichain/corpus.hpp"
#include "antichain/error.hpp"
#include "antichain/family.hpp"
#include "antichain/report.hpp"
#include "antichain/search.hpp"
#include "antichain/subsets.hpp"
#include "antichain/symmetry.hpp"
#include "antichain/version.hpp"

#endif  // ANTICHAIN_ANTICHAIN_HPP
