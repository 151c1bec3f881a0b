#pragma once

#include <graphring/capacity.hpp>
#include <graphring/clique.hpp>
#include <graphring/error.hpp>
#include <graphring/expr.hpp>
#include <graphring/families.hpp>
#include <graphring/fraclp.hpp>
#include <graphring/gf.hpp>
#include <graphring/graph.hpp>
#include <graphring/hom.hpp>
#include <graphring/ops.hpp>
#include <graphring/rational.hpp>
#include <graphring/theta.hpp>
#include <graphring/vertex_set.hpp>
