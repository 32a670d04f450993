package gamma ;

/** Generated class GammaC1. */
public class GammaC1 extends GammaC0 {
    private int f0 = 0 ;
    private int f1 = 1 ;
    private int f2 = 2 ;
    public int shared = 1 ;
    private beta . BetaC7 helper = new beta . BetaC7 ( ) ;

    public GammaC1 ( ) { }
    public int getF0 ( ) { return f0 ; }
    public void setF0 ( int v ) { this . f0 = v ; }
    public int getF1 ( ) { return f1 ; }
    public int peek ( int q ) { return q + 1 ; }
    public int area ( int s ) { return s * s ; }

    /** Work item 0. */
    protected void work0 ( int p0 , int p1 ) {
        int v = f2 ;
        v = v + helper . peek ( v ) ;
        while ( v < 100 ) {
        if ( v > 50 ) {
        break ;
        }
        v = v + 2 ;
        if ( v > 40 ) {
        continue ;
        }
        v = v + 1 ;
        }
        v = v > 2 ? v : 2 ;
        if ( v > 0 && v > 1 || v == 7 ) {
        v = v + 1 ;
        }
        switch ( v ) {
        case 1 :
        v = v + 2 ;
        break ;
        case 2 :
        v = v + 3 ;
        break ;
        default :
        v = 0 ;
        }
        v = v + helper . shared ;
        f2 = v ;
    }
}
