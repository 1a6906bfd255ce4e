#include "ccsp/carbroker.hpp"

#include <string>
#include <vector>

namespace ccsp {

namespace {

StandardTerm act(const std::string& name) { return StandardTerm::atom(Event(name)); }

CompensableTerm pair(StandardTerm p, StandardTerm q) {
  return CompensableTerm::pair(std::move(p), std::move(q));
}

// Forward action with nothing to undo.
CompensableTerm plain(const std::string& name) {
  return pair(act(name), StandardTerm::skip());
}

CompensableTerm cseq(CompensableTerm pp, CompensableTerm qq) {
  return CompensableTerm::seq(std::move(pp), std::move(qq));
}

CompensableTerm cchoice(CompensableTerm pp, CompensableTerm qq) {
  return CompensableTerm::choice(std::move(pp), std::move(qq));
}

std::string model(std::size_t m) { return "m" + std::to_string(m); }

std::string quote(std::size_t m, std::size_t q) {
  return model(m) + ".q" + std::to_string(q);
}

}  // namespace

CarBroker build_carbroker_parts(const CarBrokerConfig& cfg) {
  if (cfg.models == 0 || cfg.models > CarBrokerConfig::kMaxModels)
    throw std::invalid_argument("models must lie in 1.." +
                                std::to_string(CarBrokerConfig::kMaxModels));
  if (cfg.quotes_per_model == 0 ||
      cfg.quotes_per_model > CarBrokerConfig::kMaxQuotes)
    throw std::invalid_argument("quotes must lie in 1.." +
                                std::to_string(CarBrokerConfig::kMaxQuotes));

  std::vector<CompensableTerm> buyer_models, broker_models, supplier_models;
  std::vector<CompensableTerm> loan_requests;
  CarBroker out{StandardTerm::skip(), CompensableTerm::null(),
                CompensableTerm::null(), StandardTerm::skip(),
                StandardTerm::skip(), StandardTerm::skip(), {}, {}, {}};

  for (std::size_t m = 1; m <= cfg.models; ++m) {
    const std::string order = "order." + model(m);
    std::vector<CompensableTerm> buyer_quotes, broker_quotes, supplier_quotes;
    for (std::size_t q = 1; q <= cfg.quotes_per_model; ++q) {
      const std::string quote_ev = "quote." + quote(m, q);
      const std::string loan_ev = "reqLoan." + quote(m, q);

      // The buyer accepts with ack or lets the transaction lapse.
      buyer_quotes.push_back(cseq(
          plain(quote_ev),
          cchoice(plain("ack"), desugar_keyword(Keyword::skipp))));

      // Loan accepted: confirm to the buyer.  Rejected: abort.
      CompensableTerm outcome =
          cchoice(cseq(plain("reply.yes"), plain("ack")),
                  cseq(plain("reply.no"), desugar_keyword(Keyword::throww)));
      broker_quotes.push_back(
          cseq(plain(quote_ev),
               cseq(pair(act(loan_ev), act("cancelLoan")), std::move(outcome))));

      supplier_quotes.push_back(cseq(
          pair(act(quote_ev), act("cancelQuote." + quote(m, q))),
          desugar_keyword(Keyword::yieldd)));

      loan_requests.push_back(plain(loan_ev));

      out.a.insert(Event(quote_ev));
      out.b.insert(Event(quote_ev));
      out.c.insert(Event(loan_ev));
    }
    buyer_models.push_back(
        cseq(plain(order), indexed_choice(std::span<const CompensableTerm>(
                               buyer_quotes))));
    broker_models.push_back(cseq(
        pair(act(order), act("cancelOrder." + model(m))),
        cseq(plain("rfq"),
             indexed_choice(std::span<const CompensableTerm>(broker_quotes)))));
    supplier_models.push_back(cseq(
        plain(order),
        cseq(plain("rfq"), indexed_choice(std::span<const CompensableTerm>(
                               supplier_quotes)))));
    out.a.insert(Event(order));
    out.b.insert(Event(order));
  }
  out.a.insert(Event("ack"));
  out.b.insert(Event("rfq"));
  out.c.insert(Event("reply.yes"));
  out.c.insert(Event("reply.no"));

  out.buyer = StandardTerm::block(
      indexed_choice(std::span<const CompensableTerm>(buyer_models)));
  out.broker = indexed_choice(std::span<const CompensableTerm>(broker_models));
  out.supplier =
      indexed_choice(std::span<const CompensableTerm>(supplier_models));
  out.loanstar = StandardTerm::block(
      cseq(indexed_choice(std::span<const CompensableTerm>(loan_requests)),
           cchoice(plain("reply.yes"), plain("reply.no"))));
  out.block =
      StandardTerm::block(CompensableTerm::par(out.b, out.broker, out.supplier));
  out.system = StandardTerm::par(
      out.c, StandardTerm::par(out.a, out.buyer, out.block), out.loanstar);
  return out;
}

StandardTerm build_carbroker(const CarBrokerConfig& cfg) {
  return build_carbroker_parts(cfg).system;
}

}  // namespace ccsp
