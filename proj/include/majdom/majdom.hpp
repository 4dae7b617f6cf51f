#ifndef MAJDOM_MAJDOM_HPP
#define MAJDOM_MAJDOM_HPP

#include "majdom/campaigns.hpp"
#include "majdom/certificates.hpp"
#include "majdom/edits.hpp"
#include "majdom/exact.hpp"
#include "majdom/generate.hpp"
#include "majdom/graph.hpp"
#include "majdom/graph_io.hpp"
#include "majdom/heuristics.hpp"
#include "majdom/opinion.hpp"
#include "majdom/order.hpp"
#include "majdom/rational.hpp"
#include "majdom/selector.hpp"
#include "majdom/spanning.hpp"

#endif  // MAJDOM_MAJDOM_HPP
