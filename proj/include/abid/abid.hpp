#pragma once

#include "abid/cartan.hpp"
#include "abid/rootsys.hpp"
#include "abid/weyl.hpp"
#include "abid/affine.hpp"
#include "abid/abelian.hpp"
#include "abid/poset.hpp"
#include "abid/dynkin.hpp"
#include "abid/young.hpp"
#include "abid/serialize.hpp"
#include "abid/verify.hpp"
#include "abid/cli.hpp"
