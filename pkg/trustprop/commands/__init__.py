# Commands package for the TrustProp CLI
