namespace crosscap {}
