#pragma once

// Umbrella header: pulls in the whole library.

#include "cayley/autgrp.hpp"
#include "cayley/bitset.hpp"
#include "cayley/bounds.hpp"
#include "cayley/census.hpp"
#include "cayley/cli.hpp"
#include "cayley/digraph.hpp"
#include "cayley/group.hpp"
#include "cayley/lemmas.hpp"
#include "cayley/partition.hpp"
#include "cayley/perm.hpp"
#include "cayley/perm_group.hpp"
#include "cayley/quotient.hpp"
#include "cayley/rng.hpp"
#include "cayley/verify.hpp"
