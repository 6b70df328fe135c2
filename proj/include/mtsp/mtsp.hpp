#ifndef MTSP_MTSP_HPP
#define MTSP_MTSP_HPP

#include "mtsp/errors.hpp"
#include "mtsp/rational.hpp"
#include "mtsp/value.hpp"
#include "mtsp/temporal_graph.hpp"
#include "mtsp/objectives.hpp"
#include "mtsp/labeling.hpp"
#include "mtsp/oracle.hpp"

#endif  // MTSP_MTSP_HPP
