#pragma once

#include "qeuler/cyclotomic.hpp"
#include "qeuler/dirichlet.hpp"
#include "qeuler/io.hpp"
#include "qeuler/lfunc.hpp"
#include "qeuler/poly.hpp"
#include "qeuler/qeuler.hpp"
#include "qeuler/ratfun.hpp"
#include "qeuler/rational.hpp"
#include "qeuler/residue.hpp"
#include "qeuler/verify.hpp"
