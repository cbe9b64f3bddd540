/** Client configuration: one base URL plus display flags. */

export interface AppConfig {
  /** Base URL of the catalog service, no trailing slash. */
  baseUrl: string;
  /**
   * URL of the catalog listing (item/1 documents, JSON array or JSON
   * lines). The service owns emotions and recommendations; the catalog
   * itself is static content the client browses.
   */
  catalogUrl: string;
  /**
   * Same-emotion panels were dropped from the product after evaluation;
   * the server still supports them, so they stay behind this flag.
   */
  showSamePanel: boolean;
  /** Creator id attached to submitted stories (anonymous, opaque). */
  creatorId: string;
}

export const defaultConfig: AppConfig = {
  baseUrl: "http://127.0.0.1:8000",
  catalogUrl: "./catalog.json",
  showSamePanel: false,
  creatorId: `anon-${Math.random().toString(36).slice(2, 10)}`,
};
